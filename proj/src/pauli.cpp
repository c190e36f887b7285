#include "mbp/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace mbp {
namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_same_length(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) {
    throw UsageError("Pauli string length mismatch: " + std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()));
  }
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw ParseError(std::string("invalid Pauli character '") + c + "'");
  }
}

PauliString::PauliString(std::size_t n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string");
  PauliString p(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) p.set(i, pauli_from_char(text[i]));
  return p;
}

PauliString PauliString::from_terms(std::size_t n,
                                    const std::vector<std::pair<std::size_t, Pauli>>& terms) {
  PauliString p(n);
  for (auto [qubit, pauli] : terms) {
    if (qubit < 1 || qubit > n) {
      throw UsageError("qubit index " + std::to_string(qubit) + " outside 1.." + std::to_string(n));
    }
    p.set(qubit - 1, mul1(p[qubit - 1], pauli));
  }
  return p;
}

PauliString PauliString::parse_sparse(std::size_t n, std::string_view text) {
  std::vector<std::pair<std::size_t, Pauli>> terms;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*') {
      ++i;
      continue;
    }
    const Pauli pauli = pauli_from_char(c);
    ++i;
    std::size_t qubit = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), qubit);
    if (ec != std::errc()) throw ParseError("expected qubit index after '" + std::string(1, c) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    terms.emplace_back(qubit, pauli);
  }
  return from_terms(n, terms);
}

Pauli PauliString::operator[](std::size_t i) const {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  return pauli_from_bits(x_[i / 64] & mask, z_[i / 64] & mask);
}

void PauliString::set(std::size_t i, Pauli p) {
  if (i >= n_) throw UsageError("qubit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  x_[i / 64] = x_bit(p) ? (x_[i / 64] | mask) : (x_[i / 64] & ~mask);
  z_[i / 64] = z_bit(p) ? (z_[i / 64] | mask) : (z_[i / 64] & ~mask);
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) w += std::popcount(x_[k] | z_[k]);
  return w;
}

std::string PauliString::to_string() const {
  std::string s(n_, 'I');
  for (std::size_t i = 0; i < n_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

std::string PauliString::to_sparse_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    const Pauli p = (*this)[i];
    if (p == Pauli::I) continue;
    if (!s.empty()) s += ' ';
    s += to_char(p);
    s += std::to_string(i + 1);
  }
  return s.empty() ? "I" : s;
}

int commutes(const PauliString& p, const PauliString& q) {
  require_same_length(p, q);
  std::uint64_t acc = 0;
  const auto& px = p.x_words();
  const auto& pz = p.z_words();
  const auto& qx = q.x_words();
  const auto& qz = q.z_words();
  for (std::size_t k = 0; k < px.size(); ++k) acc ^= (px[k] & qz[k]) ^ (pz[k] & qx[k]);
  return std::popcount(acc) & 1;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  require_same_length(*this, other);
  for (std::size_t k = 0; k < x_.size(); ++k) {
    x_[k] ^= other.x_[k];
    z_[k] ^= other.z_[k];
  }
  return *this;
}

PauliString mul(const PauliString& p, const PauliString& q) {
  PauliString r = p;
  r *= q;
  return r;
}

}  // namespace mbp

#include "mbp/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace mbp {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::exact: return "exact";
    case Outcome::degenerate: return "degenerate";
    case Outcome::detected_failure: return "detected_failure";
    case Outcome::undetected_logical: return "undetected_logical";
  }
  return "?";
}

bool in_stabilizer_group(const PauliString& p, const Code& code) {
  if (p.size() != code.n()) throw UsageError("Pauli string length does not match code length");
  return code.checks().basis().contains(symplectic(p));
}

Outcome classify(const PauliString& error, const DecodeResult& result, const Syndrome& z, const Code& code) {
  if (!result.converged()) return Outcome::detected_failure;
  if (result.estimate == error) return Outcome::exact;
  const PauliString r = mul(result.estimate, error);
  if (in_stabilizer_group(r, code)) return Outcome::degenerate;
  const bool commutes_all = std::all_of(code.checks().rows().begin(), code.checks().rows().end(),
                                        [&](const PauliString& row) { return commutes(r, row) == 0; });
  if (commutes_all && syndrome(result.estimate, code.checks()) == z) return Outcome::undetected_logical;
  return Outcome::detected_failure;
}

bool brute_force_coset(const PauliString& p, const Code& code) {
  if (p.size() != code.n()) throw UsageError("Pauli string length does not match code length");
  // Independent generators picked greedily from the original rows.
  std::vector<PauliString> gens;
  gf2::EchelonBasis seen;
  for (const auto& row : code.checks().rows()) {
    if (seen.insert(symplectic(row))) gens.push_back(row);
  }
  if (gens.size() > 20) throw UsageError("brute-force coset search limited to rank <= 20");
  PauliString cur(code.n());
  if (cur == p) return true;
  const std::uint64_t count = std::uint64_t{1} << gens.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    cur *= gens[static_cast<std::size_t>(std::countr_zero(i))];
    if (cur == p) return true;
  }
  return false;
}

std::optional<std::size_t> min_logical_weight(const Code& code, std::size_t max_weight) {
  const std::size_t n = code.n();
  const auto& rows = code.checks().rows();
  PauliString p(n);
  std::vector<std::size_t> support;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      for (const auto& row : rows) {
        if (commutes(p, row)) return false;
      }
      return !in_stabilizer_group(p, code);
    }
    for (std::size_t q = start; q + remaining <= n; ++q) {
      for (Pauli w : kNonIdentity) {
        p.set(q, w);
        if (search(q + 1, remaining - 1)) return true;
      }
      p.set(q, Pauli::I);
    }
    return false;
  };
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    if (search(0, w)) return w;
  }
  return std::nullopt;
}

}  // namespace mbp

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbp/errors.hpp"

namespace mbp {

/// Single-qubit Pauli, phase dropped. The enumerator order I < X < Y < Z is
/// the tie-breaking and serialization order used throughout the library.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr Pauli kNonIdentity[3] = {Pauli::X, Pauli::Y, Pauli::Z};

// x-bit / z-bit of the symplectic encoding: I=(0,0) X=(1,0) Y=(1,1) Z=(0,1).
constexpr bool x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr bool z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

constexpr Pauli pauli_from_bits(bool x, bool z) {
  if (x) return z ? Pauli::Y : Pauli::X;
  return z ? Pauli::Z : Pauli::I;
}

/// Symplectic form <a,b>: 0 when a and b commute, 1 when they anticommute.
constexpr int commutes1(Pauli a, Pauli b) {
  return static_cast<int>((x_bit(a) && z_bit(b)) != (z_bit(a) && x_bit(b)));
}

/// Phase-free single-qubit product.
constexpr Pauli mul1(Pauli a, Pauli b) {
  return pauli_from_bits(x_bit(a) != x_bit(b), z_bit(a) != z_bit(b));
}

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Index 0..2 of a non-identity Pauli (X, Y, Z).
constexpr int llr_index(Pauli p) { return static_cast<int>(p) - 1; }

/// N-qubit Pauli operator without phase, stored as packed x and z bit planes.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n);

  static PauliString parse(std::string_view text);
  /// Builds a string from sparse 1-based (qubit, Pauli) terms, e.g. X3 Z22.
  static PauliString from_terms(std::size_t n, const std::vector<std::pair<std::size_t, Pauli>>& terms);
  /// Parses the subscript notation "X3 Z22 Y33" (1-based qubit indices).
  static PauliString parse_sparse(std::size_t n, std::string_view text);

  std::size_t size() const { return n_; }
  Pauli operator[](std::size_t i) const;
  void set(std::size_t i, Pauli p);

  std::size_t weight() const;
  bool is_identity() const { return weight() == 0; }
  std::string to_string() const;
  /// Sparse rendering with 1-based indices, e.g. "X3 Z22"; "I" for identity.
  std::string to_sparse_string() const;

  /// In-place phase-free product.
  PauliString& operator*=(const PauliString& other);

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// Sum over qubits of commutes1, mod 2.
int commutes(const PauliString& p, const PauliString& q);

/// Componentwise phase-free product.
PauliString mul(const PauliString& p, const PauliString& q);

inline std::size_t weight(const PauliString& p) { return p.weight(); }

}  // namespace mbp

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mbp::gf2 {

/// Dense bit vector packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    w_[i / 64] = v ? (w_[i / 64] | m) : (w_[i / 64] & ~m);
  }
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool any() const;
  std::size_t popcount() const;
  /// Parity of the bitwise AND.
  bool dot(const BitVec& o) const;
  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  std::vector<std::uint64_t>& words() { return w_; }
  const std::vector<std::uint64_t>& words() const { return w_; }

  friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Reduced row-echelon basis of a row space. Pivot columns are strictly
/// increasing and each pivot column is zero in every other basis row.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  explicit EchelonBasis(std::vector<BitVec> rows);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis; the result is zero iff v is in the span.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return !reduce(v).any(); }

  /// Adds v to the basis if independent. Returns true when the rank grew.
  bool insert(BitVec v);

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(std::vector<BitVec> rows);

/// Basis of { v : row . v = 0 for every row }, for rows of length `cols`.
std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, std::size_t cols);

}  // namespace mbp::gf2

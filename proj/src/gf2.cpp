#include "mbp/gf2.hpp"

#include <algorithm>
#include <bit>

namespace mbp::gf2 {

bool BitVec::any() const {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::dot(const BitVec& o) const {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= n_) return n_;
  std::size_t k = from / 64;
  std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (w != 0) return std::min(n_, k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++k >= w_.size()) return n_;
    w = w_[k];
  }
}

EchelonBasis::EchelonBasis(std::vector<BitVec> rows) {
  if (!rows.empty()) cols_ = rows.front().size();
  // Forward elimination, column by column.
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].get(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivots_.push_back(c);
    ++r;
  }
  rows.resize(r);
  rows_ = std::move(rows);
}

BitVec EchelonBasis::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= rows_[i];
  }
  return v;
}

bool EchelonBasis::insert(BitVec v) {
  if (cols_ == 0) cols_ = v.size();
  v = reduce(std::move(v));
  const std::size_t c = v.find_next(0);
  if (c >= v.size()) return false;
  for (auto& row : rows_) {
    if (row.get(c)) row ^= v;
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

std::size_t rank(std::vector<BitVec> rows) { return EchelonBasis(std::move(rows)).rank(); }

std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, std::size_t cols) {
  const EchelonBasis basis(rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : basis.pivots()) is_pivot[p] = true;

  std::vector<BitVec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(cols);
    v.set(f);
    // In reduced form, pivot variable p_i equals the row's entry at column f.
    for (std::size_t i = 0; i < basis.rank(); ++i) {
      if (basis.rows()[i].get(f)) v.set(basis.pivots()[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mbp::gf2

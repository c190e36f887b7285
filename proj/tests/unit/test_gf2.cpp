#include <random>

#include "doctest.h"
#include "mbp/gf2.hpp"

using namespace mbp::gf2;

namespace {

BitVec random_vec(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  BitVec v(n);
  std::bernoulli_distribution bit(density);
  for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
  return v;
}

// Rank by plain elimination on vector<vector<bool>>.
std::size_t naive_rank(const std::vector<BitVec>& rows, std::size_t n) {
  std::vector<std::vector<bool>> m;
  for (const auto& r : rows) {
    std::vector<bool> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = r.get(i);
    m.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < n; ++k) m[r][k] = m[r][k] != m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVec v(130);
  CHECK_FALSE(v.any());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.popcount() == 3);
  CHECK(v.find_next(1) == 64);
  CHECK(v.find_next(65) == 129);
  v.flip(129);
  CHECK(v.find_next(65) == 130);
  BitVec w(130);
  w.set(64);
  CHECK(v.dot(w));
  w.set(0);
  CHECK_FALSE(v.dot(w));
}

TEST_CASE("rank matches naive elimination") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 100;
    const std::size_t m = 1 + rng() % 40;
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < m; ++i) rows.push_back(random_vec(n, rng, 0.2));
    REQUIRE(rank(rows) == naive_rank(rows, n));
  }
}

TEST_CASE("echelon invariants and membership") {
  std::mt19937_64 rng(5);
  std::vector<BitVec> rows;
  for (int i = 0; i < 12; ++i) rows.push_back(random_vec(70, rng, 0.3));
  rows.push_back(rows[0]);
  BitVec sum = rows[1];
  sum ^= rows[2];
  rows.push_back(sum);
  const EchelonBasis b(rows);
  CHECK(b.rank() == naive_rank(rows, 70));
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (i > 0) CHECK(b.pivots()[i] > b.pivots()[i - 1]);
    for (std::size_t j = 0; j < b.rank(); ++j) CHECK(b.rows()[j].get(b.pivots()[i]) == (i == j));
  }
  for (const auto& r : rows) CHECK(b.contains(r));
  BitVec combo = rows[3];
  combo ^= rows[7];
  combo ^= rows[11];
  CHECK(b.contains(combo));
  EchelonBasis grow(std::vector<BitVec>{rows[0]});
  CHECK_FALSE(grow.insert(rows[0]));
  CHECK(grow.insert(rows[1]) == (naive_rank({rows[0], rows[1]}, 70) == 2));
}

TEST_CASE("nullspace is orthogonal with the right dimension") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 60;
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < 1 + rng() % n; ++i) rows.push_back(random_vec(n, rng, 0.3));
    const auto ns = nullspace(rows, n);
    REQUIRE(ns.size() == n - rank(rows));
    REQUIRE(rank(ns) == ns.size());
    for (const auto& v : ns) {
      for (const auto& r : rows) REQUIRE_FALSE(v.dot(r));
    }
  }
}

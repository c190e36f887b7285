#include <random>

#include "doctest.h"
#include "mbp/pauli.hpp"

using namespace mbp;

namespace {

// 2x2 complex Pauli matrices; anticommutation read off AB + BA == 0.
struct Mat {
  double re[2][2];
  double im[2][2];
};

Mat matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}};
    case Pauli::X: return {{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}};
    case Pauli::Y: return {{{0, 0}, {0, 0}}, {{0, -1}, {1, 0}}};
    case Pauli::Z: return {{{1, 0}, {0, -1}}, {{0, 0}, {0, 0}}};
  }
  return {};
}

Mat product(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        c.re[i][j] += a.re[i][k] * b.re[k][j] - a.im[i][k] * b.im[k][j];
        c.im[i][j] += a.re[i][k] * b.im[k][j] + a.im[i][k] * b.re[k][j];
      }
    }
  }
  return c;
}

bool anticommute_by_matrix(Pauli a, Pauli b) {
  const Mat ab = product(matrix(a), matrix(b));
  const Mat ba = product(matrix(b), matrix(a));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (ab.re[i][j] + ba.re[i][j] != 0.0 || ab.im[i][j] + ba.im[i][j] != 0.0) return false;
    }
  }
  return true;
}

// The product matrix equals the expected Pauli up to a phase in {1, i, -1, -i}.
bool same_up_to_phase(const Mat& m, Pauli p) {
  const Mat q = matrix(p);
  for (auto [pr, pi] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}) {
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      for (int j = 0; j < 2 && ok; ++j) {
        ok = m.re[i][j] == pr * q.re[i][j] - pi * q.im[i][j] && m.im[i][j] == pr * q.im[i][j] + pi * q.re[i][j];
      }
    }
    if (ok) return true;
  }
  return false;
}

PauliString random_string(std::size_t n, std::mt19937_64& rng) {
  PauliString p(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, static_cast<Pauli>(rng() % 4));
  return p;
}

std::vector<PauliString> all_strings(std::size_t n) {
  std::vector<PauliString> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    PauliString p(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 4) p.set(i, static_cast<Pauli>(c % 4));
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("commutes1 agrees with matrix anticommutation") {
  for (Pauli a : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
    for (Pauli b : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      CHECK(commutes1(a, b) == (anticommute_by_matrix(a, b) ? 1 : 0));
    }
  }
  CHECK(commutes1(Pauli::X, Pauli::X) == 0);
  CHECK(commutes1(Pauli::I, Pauli::Z) == 0);
  CHECK(commutes1(Pauli::Y, Pauli::Z) == 1);
}

TEST_CASE("mul1 matches the matrix product up to phase") {
  for (Pauli a : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
    for (Pauli b : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      CHECK(same_up_to_phase(product(matrix(a), matrix(b)), mul1(a, b)));
    }
  }
}

TEST_CASE("string commutation examples") {
  CHECK(commutes(PauliString::parse("IIIYI"), PauliString::parse("XZZXI")) == 1);
  CHECK(commutes(PauliString::parse("ZI"), PauliString::parse("XY")) ==
        (commutes1(Pauli::Z, Pauli::X) + commutes1(Pauli::I, Pauli::Y)) % 2);
  CHECK_THROWS_AS(commutes(PauliString::parse("XX"), PauliString::parse("XXX")), UsageError);
}

TEST_CASE("string products") {
  CHECK(mul(PauliString::parse("XZ"), PauliString::parse("XZ")) == PauliString::parse("II"));
  CHECK(mul(PauliString::parse("XI"), PauliString::parse("ZI")) == PauliString::parse("YI"));
  CHECK(mul(PauliString::parse("IIIYI"), PauliString::parse("IIIYI")) == PauliString::parse("IIIII"));
  CHECK_THROWS_AS(mul(PauliString::parse("X"), PauliString::parse("XX")), UsageError);
}

TEST_CASE("weights") {
  CHECK(weight(PauliString::parse("IIIII")) == 0);
  CHECK(weight(PauliString::parse("IXYZI")) == 3);
  CHECK(weight(PauliString::parse_sparse(49, "X3 Z22 X23 X32 Y33 Z39 Z40")) == 7);
}

TEST_CASE("exhaustive algebra on short strings") {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto all = all_strings(n);
    for (const auto& p : all) {
      CHECK(commutes(p, p) == 0);
      for (const auto& q : all) {
        REQUIRE(commutes(p, q) == commutes(q, p));
        CHECK(mul(p, q) == mul(q, p));
        for (const auto& r : all) {
          REQUIRE((commutes(mul(p, q), r) == (commutes(p, r) ^ commutes(q, r))));
          REQUIRE(mul(mul(p, q), r) == mul(p, mul(q, r)));
        }
      }
    }
  }
  const auto three = all_strings(3);
  for (const auto& p : three) {
    for (const auto& q : three) REQUIRE(commutes(p, q) == commutes(q, p));
  }
}

TEST_CASE("random long strings across word boundaries") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 200;
    const PauliString p = random_string(n, rng);
    const PauliString q = random_string(n, rng);
    int expect = 0;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      expect ^= commutes1(p[i], q[i]);
      w += p[i] != Pauli::I;
      REQUIRE(mul(p, q)[i] == mul1(p[i], q[i]));
    }
    REQUIRE(commutes(p, q) == expect);
    REQUIRE(p.weight() == w);
  }
}

TEST_CASE("parsing and printing") {
  const PauliString p = PauliString::parse("IXYZ");
  CHECK(p.to_string() == "IXYZ");
  CHECK(p.to_sparse_string() == "X2 Y3 Z4");
  CHECK(PauliString(3).to_sparse_string() == "I");
  CHECK(PauliString::parse_sparse(4, "X2 Y3 Z4") == p);
  CHECK_THROWS_AS(PauliString::parse("IXQ"), ParseError);
  CHECK_THROWS(PauliString::parse_sparse(4, "X5"));
  CHECK_THROWS(PauliString::parse_sparse(4, "X0"));
}

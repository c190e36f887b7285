#include <cmath>
#include <random>

#include <boost/math/distributions/binomial.hpp>

#include "doctest.h"
#include "mbp/errors.hpp"
#include "mbp/stats.hpp"

using namespace mbp;

TEST_CASE("bounded-distance tail") {
  CHECK(bdd_tail(5, 1, 0.01) == doctest::Approx(1 - std::pow(0.99, 5) - 5 * 0.01 * std::pow(0.99, 4)).epsilon(1e-12));
  CHECK(bdd_tail(5, 1, 0.01) == doctest::Approx(9.80e-4).epsilon(1e-3));
  CHECK(bdd_tail(17, 17, 0.2) == 0.0);
  CHECK(bdd_tail(9, 0, 0.03) == doctest::Approx(1 - std::pow(0.97, 9)).epsilon(1e-12));
  for (int t = 0; t < 30; t += 3) {
    CHECK(bdd_tail(30, t, 0.1) ==
          doctest::Approx(boost::math::cdf(boost::math::complement(boost::math::binomial(30, 0.1), t))).epsilon(1e-10));
  }
  CHECK_THROWS_AS(bdd_tail(5, 6, 0.1), UsageError);
}

TEST_CASE("bounded-distance tail agrees with sampling") {
  std::mt19937_64 rng(12);
  std::bernoulli_distribution flip(0.05);
  const int trials = 200000;
  int over = 0;
  for (int t = 0; t < trials; ++t) {
    int w = 0;
    for (int i = 0; i < 25; ++i) w += flip(rng);
    over += w > 2;
  }
  const double p = bdd_tail(25, 2, 0.05);
  const double sigma = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(static_cast<double>(over) / trials - p) < 3 * sigma);
}

TEST_CASE("Clopper-Pearson interval") {
  CHECK(confidence_interval(0, 1000).first == 0.0);
  CHECK(confidence_interval(1000, 1000).second == 1.0);
  const auto [lo, hi] = confidence_interval(100, 79172);
  const double rate = 100.0 / 79172.0;
  CHECK(lo < rate);
  CHECK(rate < hi);
  CHECK(hi - lo < 6e-4);
  // Endpoints are where the binomial tails reach 2.5%.
  const boost::math::binomial at_lo(79172, lo);
  const boost::math::binomial at_hi(79172, hi);
  CHECK(boost::math::cdf(boost::math::complement(at_lo, 99)) == doctest::Approx(0.025).epsilon(1e-6));
  CHECK(boost::math::cdf(at_hi, 100) == doctest::Approx(0.025).epsilon(1e-6));
  CHECK_THROWS_AS(confidence_interval(5, 4), UsageError);
  CHECK_THROWS_AS(confidence_interval(0, 0), UsageError);
}

TEST_CASE("degeneracy split") {
  TrialStats s;
  s.n_tot = 79172;
  s.n0 = 102;
  s.n_e = 100;
  const auto d = degeneracy_split(s);
  CHECK(d.classical_rate == doctest::Approx(1.288e-3).epsilon(1e-3));
  REQUIRE(d.suppression_ratio);
  CHECK(*d.suppression_ratio == doctest::Approx(0.980).epsilon(1e-3));
  CHECK(d.classical_rate * *d.suppression_ratio == doctest::Approx(s.rate()).epsilon(1e-14));

  s.n_e = s.n0;
  CHECK(*degeneracy_split(s).suppression_ratio == 1.0);
  s.n_e = 50;
  CHECK(*degeneracy_split(s).suppression_ratio < 1.0);
  TrialStats empty;
  empty.n_tot = 10;
  CHECK_FALSE(degeneracy_split(empty).suppression_ratio);
  CHECK(degeneracy_split(empty).classical_rate == 0.0);
}

TEST_CASE("merging counters") {
  TrialStats a;
  a.n_tot = 10;
  a.n_e = 2;
  a.alpha_hist[1.0] = 3;
  TrialStats b;
  b.n_tot = 5;
  b.n_e = 1;
  b.alpha_hist[1.0] = 1;
  b.alpha_hist[0.9] = 2;
  a.merge(b);
  CHECK(a.n_tot == 15);
  CHECK(a.n_e == 3);
  CHECK(a.alpha_hist[1.0] == 4);
  CHECK(a.alpha_hist[0.9] == 2);
}

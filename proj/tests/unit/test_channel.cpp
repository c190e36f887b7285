#include <array>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "doctest.h"
#include "mbp/channel.hpp"

using namespace mbp;

TEST_CASE("depolarizing LLRs") {
  const auto p = depolarizing_prior(5, 0.003);
  for (std::size_t n = 0; n < 5; ++n) {
    for (double v : p.llr(n)) CHECK(v == doctest::Approx(std::log(0.997 / 0.001)).epsilon(1e-12));
  }
  CHECK(p.llr(0)[0] == doctest::Approx(6.9048).epsilon(1e-4));
  for (double v : depolarizing_prior(3, 0.75).llr(2)) CHECK(std::abs(v) < 1e-12);
  for (double v : depolarizing_prior(3, 0.1).llr(1)) CHECK(v == doctest::Approx(std::log(27.0)).epsilon(1e-12));
  CHECK_THROWS_AS(depolarizing_prior(3, 0.0), UsageError);
  CHECK_THROWS_AS(depolarizing_prior(3, 1.0), UsageError);
}

TEST_CASE("LLR is strictly decreasing and changes sign at 3/4") {
  double prev = INFINITY;
  for (double eps = 0.001; eps < 0.999; eps += 0.001) {
    const double v = depolarizing_prior(1, eps).llr(0)[0];
    REQUIRE(v < prev);
    REQUIRE((v > 0) == (eps < 0.75 - 1e-12));
    prev = v;
  }
}

TEST_CASE("prior validation") {
  CHECK_THROWS_AS(ChannelPrior({{0.5, 0.5, 0.0, 0.0}}), UsageError);
  CHECK_THROWS_AS(ChannelPrior({{0.5, 0.2, 0.2, 0.2}}), UsageError);
  const ChannelPrior q({{0.7, 0.1, 0.15, 0.05}});
  CHECK(q.llr(0)[0] == doctest::Approx(std::log(7.0)));
  CHECK(q.llr(0)[2] == doctest::Approx(std::log(14.0)));
}

TEST_CASE("sampling passes a chi-square goodness-of-fit test") {
  const std::array<double, 4> probs{0.6, 0.25, 0.1, 0.05};
  const ChannelPrior prior(std::vector<std::array<double, 4>>(10, probs));
  std::array<double, 4> counts{};
  Rng rng(2024);
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) {
    const PauliString e = sample_error(prior, rng);
    for (std::size_t i = 0; i < e.size(); ++i) counts[static_cast<std::size_t>(e[i])] += 1;
  }
  const double total = 10.0 * draws;
  double stat = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double expect = total * probs[k];
    stat += (counts[k] - expect) * (counts[k] - expect) / expect;
  }
  const boost::math::chi_squared dist(3);
  CHECK(stat < boost::math::quantile(boost::math::complement(dist, 1e-3)));
}

TEST_CASE("sampling is replayable and near-noiseless at tiny eps") {
  const auto prior = depolarizing_prior(40, 0.05);
  Rng a = trial_rng(7, 3);
  Rng b = trial_rng(7, 3);
  for (int i = 0; i < 20; ++i) CHECK(sample_error(prior, a) == sample_error(prior, b));
  Rng c = trial_rng(7, 4);
  Rng d = trial_rng(7, 3);
  bool differ = false;
  for (int i = 0; i < 20; ++i) differ |= !(sample_error(prior, c) == sample_error(prior, d));
  CHECK(differ);

  const auto quiet = depolarizing_prior(20, 1e-9);
  Rng r(1);
  int zero = 0;
  for (int i = 0; i < 1000; ++i) zero += sample_error(quiet, r).is_identity();
  CHECK(zero == 1000);
}

TEST_CASE("uniform01 lies in [0, 1)") {
  Rng r(5);
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = uniform01(r);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 1e-3);
  CHECK(hi > 1.0 - 1e-3);
}

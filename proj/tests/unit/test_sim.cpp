#include <cmath>

#include "doctest.h"
#include "mbp/sim.hpp"

using namespace mbp;

namespace {

bool same_counters(const TrialStats& a, const TrialStats& b) {
  return a.n_tot == b.n_tot && a.n0 == b.n0 && a.n_e == b.n_e && a.n_u == b.n_u && a.n_conv == b.n_conv &&
         a.iter_sum == b.iter_sum && a.iter_sum_all == b.iter_sum_all && a.alpha_hist == b.alpha_hist;
}

}  // namespace

TEST_CASE("run_point is deterministic across repeats and thread counts") {
  const Code s5 = gen_surface(5);
  DecoderConfig cfg;
  cfg.alpha = 0.65;
  cfg.schedule = Schedule::serial;
  cfg.t_max = 50;
  const StopRule stop{30, 100000};
  const auto one = run_point(s5, cfg, 0.06, stop, 99, {Domain::log, 1});
  const auto again = run_point(s5, cfg, 0.06, stop, 99, {Domain::log, 1});
  const auto four = run_point(s5, cfg, 0.06, stop, 99, {Domain::log, 4});
  CHECK(same_counters(one, again));
  CHECK(same_counters(one, four));
  CHECK(one.n_e >= 30);
  CHECK_FALSE(same_counters(one, run_point(s5, cfg, 0.06, stop, 100, {Domain::log, 1})));
}

TEST_CASE("counters are consistent") {
  const Code t4 = gen_toric(4);
  DecoderConfig cfg;
  cfg.schedule = Schedule::serial;
  cfg.t_max = 50;
  cfg.alpha_grid = parse_alpha_grid("1.0:0.5:0.05");
  const auto s = run_point(t4, cfg, 0.08, {40, 100000}, 5);
  CHECK(s.n_e <= s.n0);
  CHECK(s.n_u <= s.n_e);
  CHECK(s.n_conv <= s.n_tot);
  CHECK(s.iter_sum <= s.iter_sum_all);
  std::uint64_t hist = 0;
  for (const auto& [alpha, count] : s.alpha_hist) hist += count;
  CHECK(hist == s.n_conv);
  const auto d = degeneracy_split(s);
  CHECK(d.classical_rate * d.suppression_ratio.value() == doctest::Approx(s.rate()).epsilon(1e-14));
}

TEST_CASE("max-trials cap and linear domain") {
  const Code c = gen_five_qubit();
  DecoderConfig cfg;
  cfg.alpha = 1.5;
  cfg.t_max = 30;
  const auto capped = run_point(c, cfg, 0.001, {1000, 500}, 3);
  CHECK(capped.n_tot == 500);
  const auto log_run = run_point(c, cfg, 0.05, {20, 100000}, 3);
  const auto lin_run = run_point(c, cfg, 0.05, {20, 100000}, 3, {Domain::linear, 1});
  CHECK(log_run.n_tot == lin_run.n_tot);
  CHECK(log_run.n_e == lin_run.n_e);
  CHECK_THROWS_AS(run_point(c, cfg, 0.05, {0, 10}, 3), UsageError);
  CHECK(parse_domain("linear") == Domain::linear);
  CHECK_THROWS_AS(parse_domain("exp"), UsageError);
}

TEST_CASE("five-qubit classical rate tracks the bounded-distance tail") {
  const Code c = gen_five_qubit();
  DecoderConfig cfg;
  cfg.alpha = 1.5;
  cfg.t_max = 30;
  cfg.fixed_eps0 = 0.003;
  const auto s = run_point(c, cfg, 0.01, {1000000, 100000}, 11);
  REQUIRE(s.n_tot == 100000);
  const double p = bdd_tail(5, 1, 0.01);
  const double sigma = std::sqrt(p * (1 - p) / 1e5);
  CHECK(std::abs(static_cast<double>(s.n0) / 1e5 - p) < 3 * sigma);
}

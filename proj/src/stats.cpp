#include "mbp/stats.hpp"

#include <boost/math/distributions/beta.hpp>
#include <cmath>

#include "mbp/errors.hpp"

namespace mbp {

void TrialStats::merge(const TrialStats& other) {
  n_tot += other.n_tot;
  n0 += other.n0;
  n_e += other.n_e;
  n_u += other.n_u;
  n_conv += other.n_conv;
  iter_sum += other.iter_sum;
  iter_sum_all += other.iter_sum_all;
  for (const auto& [alpha, count] : other.alpha_hist) alpha_hist[alpha] += count;
  elapsed_seconds += other.elapsed_seconds;
}

double bdd_tail(int n, int t, double eps) {
  if (n < 0 || t < 0 || t > n) throw UsageError("bdd_tail needs 0 <= t <= n");
  if (!(eps >= 0.0 && eps <= 1.0)) throw UsageError("bdd_tail needs 0 <= eps <= 1");
  if (eps == 0.0) return 0.0;
  if (eps == 1.0) return t < n ? 1.0 : 0.0;
  double total = 0.0;
  for (int w = t + 1; w <= n; ++w) {
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0) +
                            w * std::log(eps) + (n - w) * std::log1p(-eps);
    total += std::exp(log_term);
  }
  return total;
}

std::pair<double, double> confidence_interval(std::uint64_t events, std::uint64_t trials, double level) {
  if (trials == 0 || events > trials) throw UsageError("confidence interval needs 0 <= events <= trials, trials >= 1");
  if (!(level > 0.0 && level < 1.0)) throw UsageError("confidence level must lie in (0, 1)");
  const double tail = (1.0 - level) / 2.0;
  const auto k = static_cast<double>(events);
  const auto n = static_cast<double>(trials);
  const double lo = events == 0 ? 0.0 : boost::math::quantile(boost::math::beta_distribution<>(k, n - k + 1.0), tail);
  const double hi =
      events == trials ? 1.0 : boost::math::quantile(boost::math::beta_distribution<>(k + 1.0, n - k), 1.0 - tail);
  return {lo, hi};
}

DegeneracySplit degeneracy_split(const TrialStats& stats) {
  if (stats.n_tot == 0) return {0.0, std::nullopt};
  const double classical = static_cast<double>(stats.n0) / static_cast<double>(stats.n_tot);
  if (stats.n0 == 0) return {classical, std::nullopt};
  return {classical, static_cast<double>(stats.n_e) / static_cast<double>(stats.n0)};
}

}  // namespace mbp

#include "mbp/channel.hpp"

#include <cmath>

namespace mbp {

ChannelPrior::ChannelPrior(std::vector<std::array<double, 4>> probabilities) : p_(std::move(probabilities)) {
  llr_.reserve(p_.size());
  for (const auto& q : p_) {
    double total = 0.0;
    for (double v : q) {
      if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("channel probabilities must be positive and finite");
      total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) throw UsageError("channel probabilities must sum to 1");
    llr_.push_back({std::log(q[0] / q[1]), std::log(q[0] / q[2]), std::log(q[0] / q[3])});
  }
}

ChannelPrior depolarizing_prior(std::size_t n, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("depolarizing rate must lie in (0, 1)");
  const double w = eps / 3.0;
  return ChannelPrior(std::vector<std::array<double, 4>>(n, {1.0 - eps, w, w, w}));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng trial_rng(std::uint64_t master_seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(master_seed) ^ index));
}

PauliString sample_error(const ChannelPrior& prior, Rng& rng) {
  PauliString e(prior.size());
  for (std::size_t n = 0; n < prior.size(); ++n) {
    const auto& p = prior.probabilities(n);
    double u = uniform01(rng);
    if (u < p[0]) continue;
    u -= p[0];
    if (u < p[1]) {
      e.set(n, Pauli::X);
    } else if (u < p[1] + p[2]) {
      e.set(n, Pauli::Y);
    } else {
      e.set(n, Pauli::Z);
    }
  }
  return e;
}

}  // namespace mbp

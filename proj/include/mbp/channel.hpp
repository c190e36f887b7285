#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mbp/pauli.hpp"

namespace mbp {

/// Per-qubit error distribution (p^I, p^X, p^Y, p^Z) and its LLR triple
/// Lambda^W = ln(p^I / p^W).
class ChannelPrior {
 public:
  ChannelPrior() = default;
  /// Throws UsageError unless every entry is positive and each row sums to 1.
  explicit ChannelPrior(std::vector<std::array<double, 4>> probabilities);

  std::size_t size() const { return p_.size(); }
  const std::array<double, 4>& probabilities(std::size_t n) const { return p_[n]; }
  const std::array<double, 3>& llr(std::size_t n) const { return llr_[n]; }
  const std::vector<std::array<double, 3>>& llrs() const { return llr_; }

 private:
  std::vector<std::array<double, 4>> p_;
  std::vector<std::array<double, 3>> llr_;
};

/// Uniform depolarizing prior (1 - eps, eps/3, eps/3, eps/3) on n qubits.
ChannelPrior depolarizing_prior(std::size_t n, double eps);

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for trial `index` under `master_seed`.
Rng trial_rng(std::uint64_t master_seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Draws each qubit independently from its quadruple.
PauliString sample_error(const ChannelPrior& prior, Rng& rng);

}  // namespace mbp

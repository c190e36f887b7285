#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace mbp {

/// Event counters for one simulated point.
struct TrialStats {
  std::uint64_t n_tot = 0;
  /// Estimates that differ from the true error.
  std::uint64_t n0 = 0;
  /// Estimates outside the error's stabilizer coset (detected or not).
  std::uint64_t n_e = 0;
  /// Syndrome-matched logical errors.
  std::uint64_t n_u = 0;
  std::uint64_t n_conv = 0;
  /// Iterations over converging trials and over all trials.
  std::uint64_t iter_sum = 0;
  std::uint64_t iter_sum_all = 0;
  /// Converging alpha per trial, adaptive decoding only.
  std::map<double, std::uint64_t> alpha_hist;
  double elapsed_seconds = 0.0;

  double rate() const { return n_tot ? static_cast<double>(n_e) / static_cast<double>(n_tot) : 0.0; }
  double tau_conv() const { return n_conv ? static_cast<double>(iter_sum) / static_cast<double>(n_conv) : 0.0; }
  double tau_all() const { return n_tot ? static_cast<double>(iter_sum_all) / static_cast<double>(n_tot) : 0.0; }
  void merge(const TrialStats& other);
};

/// P(weight > t) for i.i.d. errors of rate eps on n qubits.
double bdd_tail(int n, int t, double eps);

/// Two-sided Clopper-Pearson interval for events / trials.
std::pair<double, double> confidence_interval(std::uint64_t events, std::uint64_t trials, double level = 0.95);

struct DegeneracySplit {
  /// n0 / n_tot.
  double classical_rate;
  /// n_e / n0, absent when n0 = 0.
  std::optional<double> suppression_ratio;
};

DegeneracySplit degeneracy_split(const TrialStats& stats);

}  // namespace mbp

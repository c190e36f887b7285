#include "mbp/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "mbp/channel.hpp"
#include "mbp/verify.hpp"

namespace mbp {
namespace {

struct TrialRecord {
  Outcome outcome;
  bool converged;
  int iterations;
  int total_iterations;
  double alpha_used;
};

}  // namespace

std::string to_string(Domain d) { return d == Domain::log ? "log" : "linear"; }

Domain parse_domain(const std::string& s) {
  if (s == "log") return Domain::log;
  if (s == "linear") return Domain::linear;
  throw UsageError("unknown domain '" + s + "'");
}

TrialStats run_point(const Code& code, const DecoderConfig& cfg, double eps, const StopRule& stop, std::uint64_t seed,
                     const SimOptions& opts) {
  validate(cfg, code.n());
  if (stop.min_events == 0 || stop.max_trials == 0) throw UsageError("stop rule values must be positive");
  const ChannelPrior truth = depolarizing_prior(code.n(), eps);
  const ChannelPrior belief = cfg.fixed_eps0 ? depolarizing_prior(code.n(), *cfg.fixed_eps0) : truth;
  const bool adaptive = !cfg.alpha_grid.empty();
  const bool linear = opts.domain == Domain::linear;

  auto run_trial = [&](std::uint64_t index) {
    Rng rng = trial_rng(seed, index);
    const PauliString error = sample_error(truth, rng);
    const Syndrome z = syndrome(error, code.checks());
    const DecodeResult res = adaptive ? decode_adaptive(code, z, belief, cfg, linear)
                                      : (linear ? decode_linear(code, z, belief, cfg) : decode(code, z, belief, cfg));
    if (res.converged() && syndrome(res.estimate, code.checks()) != z) {
      throw std::logic_error("decoder reported convergence with a mismatched syndrome");
    }
    return TrialRecord{classify(error, res, z, code), res.converged(), res.iterations, res.total_iterations,
                       res.alpha_used};
  };

  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  const auto t0 = std::chrono::steady_clock::now();
  TrialStats stats;
  std::uint64_t next = 0;
  std::uint64_t batch = 64;
  std::vector<TrialRecord> records;
  bool done = false;
  while (!done) {
    const std::uint64_t count = std::min(batch, stop.max_trials - next);
    records.assign(count, TrialRecord{});
    if (threads <= 1 || count < 2) {
      for (std::uint64_t i = 0; i < count; ++i) records[i] = run_trial(next + i);
    } else {
      std::atomic<std::uint64_t> cursor{0};
      std::exception_ptr failure;
      std::atomic<bool> failed{false};
      auto worker = [&] {
        for (std::uint64_t i = cursor++; i < count && !failed; i = cursor++) {
          try {
            records[i] = run_trial(next + i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::uint64_t>(threads, count); ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    // Accumulate in trial order so the stopping point is independent of scheduling.
    for (const auto& r : records) {
      ++stats.n_tot;
      stats.iter_sum_all += static_cast<std::uint64_t>(r.total_iterations);
      if (r.converged) {
        ++stats.n_conv;
        stats.iter_sum += static_cast<std::uint64_t>(r.iterations);
        if (adaptive) ++stats.alpha_hist[r.alpha_used];
      }
      if (r.outcome != Outcome::exact) ++stats.n0;
      if (r.outcome == Outcome::detected_failure || r.outcome == Outcome::undetected_logical) ++stats.n_e;
      if (r.outcome == Outcome::undetected_logical) ++stats.n_u;
      if (stats.n_e >= stop.min_events || stats.n_tot >= stop.max_trials) {
        done = true;
        break;
      }
    }
    next += count;
    batch = std::min<std::uint64_t>(batch * 2, 4096);
  }
  stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats;
}

}  // namespace mbp

#pragma once

#include <cstdint>
#include <string>

#include "mbp/code.hpp"
#include "mbp/decoder.hpp"
#include "mbp/stats.hpp"

namespace mbp {

enum class Domain { log, linear };

std::string to_string(Domain d);
Domain parse_domain(const std::string& s);

struct StopRule {
  std::uint64_t min_events = 100;
  std::uint64_t max_trials = 10'000'000;
};

struct SimOptions {
  Domain domain = Domain::log;
  /// 0 means hardware concurrency.
  unsigned threads = 1;
};

/// Monte-Carlo estimate at depolarizing rate eps. Trials are drawn from
/// per-trial streams of `seed`; results do not depend on the thread count.
/// Decoding is adaptive when cfg.alpha_grid is non-empty; the decoder prior
/// uses cfg.fixed_eps0 when set.
TrialStats run_point(const Code& code, const DecoderConfig& cfg, double eps, const StopRule& stop, std::uint64_t seed,
                     const SimOptions& opts = {});

}  // namespace mbp

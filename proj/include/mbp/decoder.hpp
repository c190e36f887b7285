#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbp/channel.hpp"
#include "mbp/code.hpp"
#include "mbp/messages.hpp"

namespace mbp {

enum class Mode { mbp, normalized };
enum class Schedule { parallel, serial, grouped };

std::string to_string(Mode m);
std::string to_string(Schedule s);
Mode parse_mode(const std::string& s);
Schedule parse_schedule(const std::string& s);

struct DecoderConfig {
  /// Vertical-step divisor; in normalized mode this is alpha_c.
  double alpha = 1.0;
  double beta = 0.0;
  Mode mode = Mode::mbp;
  Schedule schedule = Schedule::parallel;
  /// Qubit partition (0-based) for the grouped schedule.
  std::vector<std::vector<std::uint32_t>> groups;
  int t_max = 100;
  double clip = kDefaultClip;
  /// Descending alpha values for decode_adaptive.
  std::vector<double> alpha_grid;
  /// Build the decoder prior from this rate instead of the sampling rate.
  std::optional<double> fixed_eps0;
  /// Use lambda(Gamma_n) - c * Delta for outgoing messages instead of
  /// recomputing lambda(Gamma_{n->m}) from the triple.
  bool shortcut = true;
  bool trace_energy = false;
  bool record_trajectory = false;
};

/// Throws UsageError on invalid settings.
void validate(const DecoderConfig& cfg, std::size_t n_qubits);

enum class Status { converge, fail };

struct EnergyRecord {
  int iter;
  double j_s_bounded;
  int j_s_mismatch;
};

struct IterationSnapshot {
  PauliString estimate;
  /// Posterior LLR triples ln(q^I / q^W) after the vertical step.
  std::vector<LlrTriple> gamma;
};

struct DecodeResult {
  Status status = Status::fail;
  PauliString estimate;
  int iterations = 0;
  /// Iterations summed over every inner run (differs from `iterations`
  /// only for adaptive decoding).
  int total_iterations = 0;
  double alpha_used = 0.0;
  std::vector<EnergyRecord> energy_trace;
  std::vector<IterationSnapshot> trajectory;

  bool converged() const { return status == Status::converge; }
};

/// Log-domain decoder (MBP or normalized BP) under the configured schedule.
DecodeResult decode(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg);

/// Linear-domain MBP; requires beta = 0 and mode mbp.
DecodeResult decode_linear(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg);

/// Runs cfg.alpha_grid in order with beta = 0 and returns the first
/// converging run. On exhaustion returns the last run's estimate with
/// status fail.
DecodeResult decode_adaptive(const Code& code, const Syndrome& z, const ChannelPrior& prior,
                             const DecoderConfig& cfg, bool linear = false);

/// Hard decision on one LLR triple: I when every entry is >= 0, otherwise
/// the smallest entry with ties broken X < Y < Z.
Pauli hard_decision(const LlrTriple& gamma);

/// Parses "start:stop:step" (descending) or a comma list into a grid.
std::vector<double> parse_alpha_grid(const std::string& text);

}  // namespace mbp

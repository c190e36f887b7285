#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mbp/code.hpp"
#include "mbp/decoder.hpp"

namespace mbp {

enum class Outcome { exact, degenerate, detected_failure, undetected_logical };

std::string to_string(Outcome o);

/// True iff P is a phase-free product of stabilizer rows.
bool in_stabilizer_group(const PauliString& p, const Code& code);

/// Exact, then degenerate (E * Ehat in S), then undetected_logical
/// (syndrome matched, E * Ehat in N(S) \ S), else detected_failure.
/// A failed decode always yields detected_failure.
Outcome classify(const PauliString& error, const DecodeResult& result, const Syndrome& z, const Code& code);

/// Enumerates every product of an independent set of rows. Requires
/// rank <= 20.
bool brute_force_coset(const PauliString& p, const Code& code);

/// Smallest weight of an operator in N(S) \ S, searching weights up to
/// `max_weight`; nullopt if none is found.
std::optional<std::size_t> min_logical_weight(const Code& code, std::size_t max_weight);

}  // namespace mbp

#pragma once

#include <array>
#include <span>

#include "mbp/pauli.hpp"

namespace mbp {

inline constexpr double kDefaultClip = 30.0;
/// Bound on |prod tanh(a/2)| before atanh, keeping boxplus finite.
inline constexpr double kTanhClamp = 1.0 - 1e-12;

using LlrTriple = std::array<double, 3>;

/// lambda_W(gamma) = ln[(1 + e^{-g^W}) / (e^{-g^X} + e^{-g^Y} + e^{-g^Z} - e^{-g^W})],
/// evaluated in log-sum-exp form. W must be non-identity.
double lambda_raw(const LlrTriple& gamma, Pauli w);

inline double clip_to(double v, double bound) { return v > bound ? bound : (v < -bound ? -bound : v); }

inline double lambda_w(const LlrTriple& gamma, Pauli w, double clip = kDefaultClip) {
  return clip_to(lambda_raw(gamma, w), clip);
}

inline double clamp_tanh(double t) { return clip_to(t, kTanhClamp); }

/// 2 atanh(prod tanh(a_k / 2)) with the product clamped into (-1, 1).
double boxplus(std::span<const double> values);

}  // namespace mbp

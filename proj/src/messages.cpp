#include "mbp/messages.hpp"

#include <algorithm>
#include <cmath>

namespace mbp {
namespace {

// ln(1 + e^x) without overflow.
double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

double logaddexp(double a, double b) {
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

double lambda_raw(const LlrTriple& gamma, Pauli w) {
  const int k = llr_index(w);
  if (k < 0) throw UsageError("lambda_W needs a non-identity Pauli");
  // The denominator is the sum over the two Paulis that anticommute with W.
  const int a = (k + 1) % 3;
  const int b = (k + 2) % 3;
  return softplus(-gamma[k]) - logaddexp(-gamma[a], -gamma[b]);
}

double boxplus(std::span<const double> values) {
  if (values.empty()) throw UsageError("boxplus of an empty sequence");
  double prod = 1.0;
  for (double a : values) prod *= std::tanh(a / 2.0);
  return 2.0 * std::atanh(clamp_tanh(prod));
}

}  // namespace mbp

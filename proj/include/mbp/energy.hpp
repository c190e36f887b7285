#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbp/channel.hpp"
#include "mbp/code.hpp"
#include "mbp/messages.hpp"

namespace mbp {

using GammaVec = std::vector<LlrTriple>;

inline constexpr double kDefaultEta = 1e6;
inline constexpr double kDefaultEnergyBound = 6.0;

/// J_D = 1/2 ||Gamma - Lambda||^2.
double j_d(const GammaVec& gamma, const ChannelPrior& prior);

/// Per-check Delta_m = 2 atanh((-1)^{z_m} prod_n tanh(lambda_{S_mn}(Gamma_n) / 2)).
std::vector<double> check_energies(const GammaVec& gamma, const Code& code, const Syndrome& z,
                                   double clip = kDefaultClip);

/// J_S = -sum_m Delta_m.
double j_s(const GammaVec& gamma, const Code& code, const Syndrome& z, double clip = kDefaultClip);

/// Gradient of J_D + eta * J_S with respect to every Gamma_n^W.
GammaVec grad_j(const GammaVec& gamma, const ChannelPrior& prior, const Code& code, const Syndrome& z,
                double eta, double clip = kDefaultClip);

/// Unit-step gradient update written around Lambda:
/// Lambda - sum omega0 * Dtilde + sum omega1 * Dtilde.
GammaVec gd_step(const GammaVec& gamma, const ChannelPrior& prior, const Code& code, const Syndrome& z,
                 double eta, double clip = kDefaultClip);

/// g_mn(Gamma) = (1 - t_n^2) / (1 - (prod_l t_l)^2) for the edge between
/// check m and qubit n (0-based). Throws UsageError if no such edge.
double g_mn_at(const GammaVec& gamma, const Code& code, std::size_t m, std::size_t n,
               double clip = kDefaultClip);

/// 1 / g_mn at the symmetric depolarizing prior for a weight-k check:
/// (1 - t^{2k}) / (1 - t^2) with t = 1 - 4 eps / 3.
double inv_g_channel(double eps, int k);

/// -sum_m sgn(Delta_m) min(|Delta_m|, bound).
double j_s_bounded(const GammaVec& gamma, const Code& code, const Syndrome& z, double bound = kDefaultEnergyBound,
                   double clip = kDefaultClip);

/// delta_m = (-1)^{z_m} prod_n ((q^I + q^{S_mn}) - sum of the other two),
/// with q the distribution whose LLRs are Gamma_n. Delta_m = ln((1 + delta_m) / (1 - delta_m)).
std::vector<double> linear_check_deltas(const GammaVec& gamma, const Code& code, const Syndrome& z);

/// -2 sum_m (delta_m + delta_m^3 / 3 + ... + delta_m^l / l), l odd.
double j_s_taylor(std::span<const double> deltas, int order);

/// sum_m min(0, Delta_m).
double j_s_negative(const GammaVec& gamma, const Code& code, const Syndrome& z, double clip = kDefaultClip);

/// -(number of checks where syndrome(estimate) differs from z).
int j_s_mismatch(const PauliString& estimate, const Code& code, const Syndrome& z);

}  // namespace mbp

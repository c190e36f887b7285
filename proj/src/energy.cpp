#include "mbp/energy.hpp"

#include <cmath>

namespace mbp {
namespace {

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

void require_sizes(const GammaVec& gamma, const Code& code, const Syndrome& z) {
  if (gamma.size() != code.n()) throw UsageError("LLR vector length does not match code length");
  if (z.size() != code.checks().num_rows()) throw UsageError("syndrome length does not match check count");
}

// tanh(lambda_{S_mn}(Gamma_n) / 2) for every edge.
std::vector<double> edge_tanh(const GammaVec& gamma, const TannerGraph& g, double clip) {
  std::vector<double> t(g.edges.size());
  for (std::size_t e = 0; e < t.size(); ++e) {
    t[e] = std::tanh(lambda_w(gamma[g.edges[e].qubit], g.edges[e].pauli, clip) / 2.0);
  }
  return t;
}

// eta * (dJ_S / dGamma), the part of the gradient contributed by the checks.
GammaVec check_gradient(const GammaVec& gamma, const Code& code, const Syndrome& z, double eta, double clip) {
  require_sizes(gamma, code, z);
  const TannerGraph& g = code.checks().tanner();
  const auto t = edge_tanh(gamma, g, clip);
  GammaVec out(gamma.size(), LlrTriple{0.0, 0.0, 0.0});
  for (std::size_t m = 0; m < g.num_checks(); ++m) {
    const auto begin = g.check_begin[m];
    const auto end = g.check_begin[m + 1];
    double prod = 1.0;
    for (auto e = begin; e < end; ++e) prod *= t[e];
    const double denom = 1.0 - std::pow(clamp_tanh(prod), 2);
    for (auto e = begin; e < end; ++e) {
      double others = z[m] ? -1.0 : 1.0;
      for (auto k = begin; k < end; ++k) {
        if (k != e) others *= t[k];
      }
      const Edge& edge = g.edges[e];
      const LlrTriple& gn = gamma[edge.qubit];
      const double weight = eta * (1.0 - t[e] * t[e]) / denom * others;
      const int s = llr_index(edge.pauli);
      // omega0 = e^{-G^S} / (1 + e^{-G^S}); omega1 = e^{-G^W} / (e^{-G^W} + e^{-G^V}),
      // where V is the other Pauli anticommuting with S.
      out[edge.qubit][static_cast<std::size_t>(s)] += weight * sigmoid(-gn[static_cast<std::size_t>(s)]);
      const auto a = static_cast<std::size_t>((s + 1) % 3);
      const auto b = static_cast<std::size_t>((s + 2) % 3);
      out[edge.qubit][a] -= weight * sigmoid(gn[b] - gn[a]);
      out[edge.qubit][b] -= weight * sigmoid(gn[a] - gn[b]);
    }
  }
  return out;
}

}  // namespace

double j_d(const GammaVec& gamma, const ChannelPrior& prior) {
  if (gamma.size() != prior.size()) throw UsageError("LLR vector length does not match prior length");
  double total = 0.0;
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    for (std::size_t w = 0; w < 3; ++w) {
      const double d = gamma[n][w] - prior.llr(n)[w];
      total += d * d;
    }
  }
  return total / 2.0;
}

std::vector<double> check_energies(const GammaVec& gamma, const Code& code, const Syndrome& z, double clip) {
  require_sizes(gamma, code, z);
  const TannerGraph& g = code.checks().tanner();
  const auto t = edge_tanh(gamma, g, clip);
  std::vector<double> out(g.num_checks());
  for (std::size_t m = 0; m < out.size(); ++m) {
    double prod = z[m] ? -1.0 : 1.0;
    for (auto e = g.check_begin[m]; e < g.check_begin[m + 1]; ++e) prod *= t[e];
    out[m] = 2.0 * std::atanh(clamp_tanh(prod));
  }
  return out;
}

double j_s(const GammaVec& gamma, const Code& code, const Syndrome& z, double clip) {
  double total = 0.0;
  for (double d : check_energies(gamma, code, z, clip)) total -= d;
  return total;
}

GammaVec grad_j(const GammaVec& gamma, const ChannelPrior& prior, const Code& code, const Syndrome& z, double eta,
                double clip) {
  if (gamma.size() != prior.size()) throw UsageError("LLR vector length does not match prior length");
  GammaVec out = check_gradient(gamma, code, z, eta, clip);
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    for (std::size_t w = 0; w < 3; ++w) out[n][w] += gamma[n][w] - prior.llr(n)[w];
  }
  return out;
}

GammaVec gd_step(const GammaVec& gamma, const ChannelPrior& prior, const Code& code, const Syndrome& z, double eta,
                 double clip) {
  if (gamma.size() != prior.size()) throw UsageError("LLR vector length does not match prior length");
  GammaVec out = check_gradient(gamma, code, z, eta, clip);
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    for (std::size_t w = 0; w < 3; ++w) out[n][w] = prior.llr(n)[w] - out[n][w];
  }
  return out;
}

double g_mn_at(const GammaVec& gamma, const Code& code, std::size_t m, std::size_t n, double clip) {
  const TannerGraph& g = code.checks().tanner();
  if (gamma.size() != code.n()) throw UsageError("LLR vector length does not match code length");
  if (m >= g.num_checks()) throw UsageError("check index out of range");
  double prod = 1.0;
  double tn = 0.0;
  bool found = false;
  for (auto e = g.check_begin[m]; e < g.check_begin[m + 1]; ++e) {
    const double t = std::tanh(lambda_w(gamma[g.edges[e].qubit], g.edges[e].pauli, clip) / 2.0);
    prod *= t;
    if (g.edges[e].qubit == n) {
      tn = t;
      found = true;
    }
  }
  if (!found) throw UsageError("no edge between check " + std::to_string(m) + " and qubit " + std::to_string(n));
  return (1.0 - tn * tn) / (1.0 - std::pow(clamp_tanh(prod), 2));
}

double inv_g_channel(double eps, int k) {
  if (!(eps > 0.0 && eps < 0.75)) throw UsageError("inv_g_channel needs 0 < eps < 3/4");
  if (k < 2) throw UsageError("inv_g_channel needs k >= 2");
  const double t2 = std::pow(1.0 - 4.0 * eps / 3.0, 2);
  return (1.0 - std::pow(t2, k)) / (1.0 - t2);
}

double j_s_bounded(const GammaVec& gamma, const Code& code, const Syndrome& z, double bound, double clip) {
  if (!(bound > 0.0)) throw UsageError("energy bound must be positive");
  double total = 0.0;
  for (double d : check_energies(gamma, code, z, clip)) total -= std::copysign(std::min(std::abs(d), bound), d);
  return total;
}

std::vector<double> linear_check_deltas(const GammaVec& gamma, const Code& code, const Syndrome& z) {
  require_sizes(gamma, code, z);
  const TannerGraph& g = code.checks().tanner();
  std::vector<std::array<double, 4>> q(gamma.size());
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    // q^W proportional to e^{-Gamma^W}, shifted by the largest exponent.
    const double shift = std::max({0.0, -gamma[n][0], -gamma[n][1], -gamma[n][2]});
    q[n] = {std::exp(-shift), std::exp(-gamma[n][0] - shift), std::exp(-gamma[n][1] - shift),
            std::exp(-gamma[n][2] - shift)};
    const double total = q[n][0] + q[n][1] + q[n][2] + q[n][3];
    for (double& v : q[n]) v /= total;
  }
  std::vector<double> out(g.num_checks());
  for (std::size_t m = 0; m < out.size(); ++m) {
    double prod = z[m] ? -1.0 : 1.0;
    for (auto e = g.check_begin[m]; e < g.check_begin[m + 1]; ++e) {
      const auto& qn = q[g.edges[e].qubit];
      const auto s = static_cast<std::size_t>(g.edges[e].pauli);
      const double comm = qn[0] + qn[s];
      prod *= comm - (1.0 - comm);
    }
    out[m] = prod;
  }
  return out;
}

double j_s_taylor(std::span<const double> deltas, int order) {
  if (order < 1 || order % 2 == 0) throw UsageError("Taylor order must be odd and positive");
  double total = 0.0;
  for (double d : deltas) {
    if (std::abs(d) > 1.0) throw UsageError("Taylor energy needs |delta| <= 1");
    double term = d;
    const double d2 = d * d;
    for (int j = 1; j <= order; j += 2) {
      total += term / j;
      term *= d2;
    }
  }
  return -2.0 * total;
}

double j_s_negative(const GammaVec& gamma, const Code& code, const Syndrome& z, double clip) {
  double total = 0.0;
  for (double d : check_energies(gamma, code, z, clip)) total += std::min(0.0, d);
  return total;
}

int j_s_mismatch(const PauliString& estimate, const Code& code, const Syndrome& z) {
  const Syndrome zh = syndrome(estimate, code.checks());
  if (zh.size() != z.size()) throw UsageError("syndrome length does not match check count");
  int count = 0;
  for (std::size_t m = 0; m < z.size(); ++m) count += zh[m] != z[m];
  return -count;
}

}  // namespace mbp

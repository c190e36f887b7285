#include "mbp/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mbp/energy.hpp"

namespace mbp {
namespace {

constexpr double sign_of(std::uint8_t z) { return z ? -1.0 : 1.0; }

// Leave-one-out products of `factors`, written into `out`.
void exclusive_products(const std::vector<double>& factors, std::vector<double>& out) {
  const std::size_t k = factors.size();
  out.assign(k, 1.0);
  double prefix = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = prefix;
    prefix *= factors[i];
  }
  double suffix = 1.0;
  for (std::size_t i = k; i-- > 0;) {
    out[i] *= suffix;
    suffix *= factors[i];
  }
}

class LogEngine {
 public:
  LogEngine(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg)
      : g_(code.checks().tanner()),
        z_(z),
        prior_(prior),
        clip_(cfg.clip),
        inv_alpha_(1.0 / cfg.alpha),
        beta_(cfg.mode == Mode::mbp ? cfg.beta : 0.0),
        inhibit_(cfg.mode == Mode::mbp ? 1.0 : 1.0 / cfg.alpha),
        shortcut_(cfg.shortcut),
        lam_(g_.edges.size()),
        delta_(g_.edges.size(), 0.0),
        gamma_(prior.llrs()) {
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      const Edge& edge = g_.edges[e];
      lam_[e] = lambda_w(prior_.llr(edge.qubit), edge.pauli, clip_);
    }
  }

  void update_check(std::uint32_t m) {
    const auto begin = g_.check_begin[m];
    const auto end = g_.check_begin[m + 1];
    t_.clear();
    for (auto e = begin; e < end; ++e) t_.push_back(std::tanh(lam_[e] / 2.0));
    exclusive_products(t_, loo_);
    const double s = sign_of(z_[m]);
    for (auto e = begin; e < end; ++e) delta_[e] = to_delta(s, loo_[e - begin]);
  }

  void update_edge_in(std::uint32_t e) {
    const auto m = g_.edges[e].check;
    double prod = 1.0;
    for (auto k = g_.check_begin[m]; k < g_.check_begin[m + 1]; ++k) {
      if (k != e) prod *= std::tanh(lam_[k] / 2.0);
    }
    delta_[e] = to_delta(sign_of(z_[m]), prod);
  }

  void update_variable(std::uint32_t n) {
    LlrTriple gamma = prior_.llr(n);
    for (auto e : g_.qubit_edges[n]) {
      const Pauli s = g_.edges[e].pauli;
      const double d = delta_[e];
      for (Pauli w : kNonIdentity) {
        if (commutes1(w, s)) {
          gamma[llr_index(w)] += inv_alpha_ * d;
        } else if (w == s) {
          gamma[llr_index(w)] -= beta_ * d;
        }
      }
    }
    gamma_[n] = gamma;
  }

  void update_outgoing(std::uint32_t n) {
    const LlrTriple& gamma = gamma_[n];
    LlrTriple raw{};
    if (shortcut_) {
      for (Pauli w : kNonIdentity) raw[llr_index(w)] = lambda_raw(gamma, w);
    }
    for (auto e : g_.qubit_edges[n]) {
      const Pauli s = g_.edges[e].pauli;
      if (shortcut_) {
        lam_[e] = clip_to(raw[llr_index(s)] - inhibit_ * delta_[e], clip_);
        continue;
      }
      LlrTriple out = gamma;
      for (Pauli w : kNonIdentity) {
        if (commutes1(w, s)) out[llr_index(w)] -= inhibit_ * delta_[e];
      }
      lam_[e] = lambda_w(out, s, clip_);
    }
  }

  Pauli decide(std::uint32_t n) const { return hard_decision(gamma_[n]); }
  GammaVec gammas() const { return gamma_; }

 private:
  double to_delta(double sign, double prod) const { return clip_to(sign * 2.0 * std::atanh(clamp_tanh(prod)), clip_); }

  const TannerGraph& g_;
  const Syndrome& z_;
  const ChannelPrior& prior_;
  double clip_;
  double inv_alpha_;
  double beta_;
  double inhibit_;
  bool shortcut_;
  std::vector<double> lam_;
  std::vector<double> delta_;
  GammaVec gamma_;
  std::vector<double> t_, loo_;
};

// Linear-domain engine. Each binary message is kept as its probability pair:
// d_{n->m} = q0 - q1 as (q0, q1) and delta_{m->n} as ((1 + delta) / 2,
// (1 - delta) / 2). Products of d become the even/odd parity recursion,
// which avoids cancellation when |d| is close to 1. Both pairs are bounded
// away from 0 by the same limits the log domain applies.
class LinearEngine {
 public:
  using Pair = std::array<double, 2>;

  LinearEngine(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg)
      : g_(code.checks().tanner()),
        z_(z),
        prior_(prior),
        inv_alpha_(1.0 / cfg.alpha),
        d_floor_(1.0 / (1.0 + std::exp(cfg.clip))),
        delta_floor_((1.0 - kTanhClamp) / 2.0),
        d_(g_.edges.size()),
        delta_(g_.edges.size(), Pair{0.5, 0.5}),
        q_(prior.size()) {
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      const Edge& edge = g_.edges[e];
      const auto& p = prior_.probabilities(edge.qubit);
      const double q0 = p[0] + p[static_cast<std::size_t>(edge.pauli)];
      d_[e] = bounded({q0, p[1] + p[2] + p[3] - p[static_cast<std::size_t>(edge.pauli)]}, d_floor_);
    }
    for (std::size_t n = 0; n < q_.size(); ++n) q_[n] = prior_.probabilities(n);
  }

  void update_check(std::uint32_t m) {
    const auto begin = g_.check_begin[m];
    const auto end = g_.check_begin[m + 1];
    const std::size_t k = end - begin;
    prefix_.assign(k + 1, Pair{1.0, 0.0});
    suffix_.assign(k + 1, Pair{1.0, 0.0});
    for (std::size_t i = 0; i < k; ++i) prefix_[i + 1] = parity(prefix_[i], d_[begin + i]);
    for (std::size_t i = k; i-- > 0;) suffix_[i] = parity(suffix_[i + 1], d_[begin + i]);
    for (std::size_t i = 0; i < k; ++i) set_delta(begin + static_cast<std::uint32_t>(i), parity(prefix_[i], suffix_[i + 1]), m);
  }

  void update_edge_in(std::uint32_t e) {
    const auto m = g_.edges[e].check;
    Pair acc{1.0, 0.0};
    for (auto k = g_.check_begin[m]; k < g_.check_begin[m + 1]; ++k) {
      if (k != e) acc = parity(acc, d_[k]);
    }
    set_delta(e, acc, m);
  }

  void update_variable(std::uint32_t n) {
    edge_factors(n);
    const std::size_t k = g_.qubit_edges[n].size();
    std::array<double, 4> q = prior_.probabilities(n);
    if (k > 0) {
      for (std::size_t w = 0; w < 4; ++w) q[w] *= loo_[w][0] * factors_[w][0];
    }
    const double total = q[0] + q[1] + q[2] + q[3];
    for (double& v : q) v /= total;
    q_[n] = q;
  }

  void update_outgoing(std::uint32_t n) {
    edge_factors(n);
    const auto& edges = g_.qubit_edges[n];
    const auto& p = prior_.probabilities(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto e = edges[i];
      const auto s = static_cast<std::size_t>(g_.edges[e].pauli);
      std::array<double, 4> q{};
      for (std::size_t w = 0; w < 4; ++w) q[w] = p[w] * loo_[w][i];
      const double comm = q[0] + q[s];
      const double anti = q[1] + q[2] + q[3] - q[s];
      const double a0 = comm / std::pow(delta_[e][0], 1.0 - inv_alpha_);
      const double a1 = anti / std::pow(delta_[e][1], 1.0 - inv_alpha_);
      d_[e] = bounded({a0 / (a0 + a1), a1 / (a0 + a1)}, d_floor_);
    }
  }

  Pauli decide(std::uint32_t n) const {
    const auto& q = q_[n];
    int best = 0;
    for (int w = 1; w < 4; ++w) {
      if (q[static_cast<std::size_t>(w)] > q[static_cast<std::size_t>(best)]) best = w;
    }
    return static_cast<Pauli>(best);
  }

  GammaVec gammas() const {
    GammaVec out(q_.size());
    for (std::size_t n = 0; n < q_.size(); ++n) {
      for (std::size_t w = 0; w < 3; ++w) out[n][w] = std::log(q_[n][0] / q_[n][w + 1]);
    }
    return out;
  }

 private:
  // (even, odd) parity of two independent binary variables.
  static Pair parity(const Pair& a, const Pair& b) {
    return {a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
  }

  static Pair bounded(Pair v, double floor) {
    if (v[0] < floor) return {floor, 1.0 - floor};
    if (v[1] < floor) return {1.0 - floor, floor};
    return v;
  }

  void set_delta(std::uint32_t e, Pair p, std::uint32_t m) {
    if (z_[m]) std::swap(p[0], p[1]);
    delta_[e] = bounded(p, delta_floor_);
  }

  // factors_[W][i] = r_{m_i -> n}^{<W, S_{m_i n}>} divided by max(r0, r1);
  // the common rescaling cancels when q is normalized. loo_ holds the
  // leave-one-out products.
  void edge_factors(std::uint32_t n) {
    const auto& edges = g_.qubit_edges[n];
    for (auto& f : factors_) f.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& edge = g_.edges[edges[i]];
      const double r0 = std::pow(delta_[edges[i]][0], inv_alpha_);
      const double r1 = std::pow(delta_[edges[i]][1], inv_alpha_);
      const double scale = std::max(r0, r1);
      for (std::size_t w = 0; w < 4; ++w) {
        factors_[w][i] = commutes1(static_cast<Pauli>(w), edge.pauli) ? r1 / scale : r0 / scale;
      }
    }
    for (std::size_t w = 0; w < 4; ++w) exclusive_products(factors_[w], loo_[w]);
  }

  const TannerGraph& g_;
  const Syndrome& z_;
  const ChannelPrior& prior_;
  double inv_alpha_;
  double d_floor_;
  double delta_floor_;
  std::vector<Pair> d_;
  std::vector<Pair> delta_;
  std::vector<std::array<double, 4>> q_;
  std::vector<Pair> prefix_, suffix_;
  std::array<std::vector<double>, 4> factors_;
  std::array<std::vector<double>, 4> loo_;
};

bool syndrome_matches(const PauliString& est, const TannerGraph& g, const Syndrome& z) {
  for (std::size_t m = 0; m < z.size(); ++m) {
    int s = 0;
    for (auto k = g.check_begin[m]; k < g.check_begin[m + 1]; ++k) s ^= commutes1(est[g.edges[k].qubit], g.edges[k].pauli);
    if (s != z[m]) return false;
  }
  return true;
}

template <class Engine>
DecodeResult run_schedule(Engine& eng, const Code& code, const Syndrome& z, const DecoderConfig& cfg) {
  const TannerGraph& g = code.checks().tanner();
  const auto n_qubits = static_cast<std::uint32_t>(code.n());
  const auto n_checks = static_cast<std::uint32_t>(g.num_checks());
  std::size_t max_group = 0;
  for (const auto& grp : cfg.groups) max_group = std::max(max_group, grp.size());

  DecodeResult res;
  res.alpha_used = cfg.alpha;
  PauliString est(code.n());
  for (int it = 1; it <= cfg.t_max; ++it) {
    switch (cfg.schedule) {
      case Schedule::parallel:
        for (std::uint32_t m = 0; m < n_checks; ++m) eng.update_check(m);
        for (std::uint32_t n = 0; n < n_qubits; ++n) eng.update_variable(n);
        break;
      case Schedule::serial:
        for (std::uint32_t n = 0; n < n_qubits; ++n) {
          for (auto e : g.qubit_edges[n]) eng.update_edge_in(e);
          eng.update_variable(n);
          eng.update_outgoing(n);
        }
        break;
      case Schedule::grouped:
        for (std::size_t j = 0; j < max_group; ++j) {
          for (const auto& grp : cfg.groups) {
            if (j < grp.size()) {
              for (auto e : g.qubit_edges[grp[j]]) eng.update_edge_in(e);
            }
          }
          for (const auto& grp : cfg.groups) {
            if (j < grp.size()) {
              eng.update_variable(grp[j]);
              eng.update_outgoing(grp[j]);
            }
          }
        }
        break;
    }
    for (std::uint32_t n = 0; n < n_qubits; ++n) est.set(n, eng.decide(n));
    const bool ok = syndrome_matches(est, g, z);

    if (cfg.trace_energy || cfg.record_trajectory) {
      GammaVec gamma = eng.gammas();
      if (cfg.trace_energy) {
        res.energy_trace.push_back({it, j_s_bounded(gamma, code, z, kDefaultEnergyBound, cfg.clip),
                                    j_s_mismatch(est, code, z)});
      }
      if (cfg.record_trajectory) res.trajectory.push_back({est, std::move(gamma)});
    }

    res.iterations = it;
    if (ok) {
      res.status = Status::converge;
      break;
    }
    if (it < cfg.t_max && cfg.schedule == Schedule::parallel) {
      for (std::uint32_t n = 0; n < n_qubits; ++n) eng.update_outgoing(n);
    }
  }
  res.total_iterations = res.iterations;
  res.estimate = std::move(est);
  return res;
}

void check_inputs(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg) {
  validate(cfg, code.n());
  if (z.size() != code.checks().num_rows()) {
    throw UsageError("syndrome length " + std::to_string(z.size()) + " does not match " +
                     std::to_string(code.checks().num_rows()) + " checks");
  }
  if (prior.size() != code.n()) throw UsageError("prior length does not match code length");
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::mbp ? "mbp" : "normalized"; }

std::string to_string(Schedule s) {
  switch (s) {
    case Schedule::parallel: return "parallel";
    case Schedule::serial: return "serial";
    case Schedule::grouped: return "grouped";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "mbp") return Mode::mbp;
  if (s == "normalized" || s == "normalized-bp") return Mode::normalized;
  throw UsageError("unknown decoder mode '" + s + "'");
}

Schedule parse_schedule(const std::string& s) {
  if (s == "parallel") return Schedule::parallel;
  if (s == "serial") return Schedule::serial;
  if (s == "grouped" || s == "grouped-serial") return Schedule::grouped;
  throw UsageError("unknown schedule '" + s + "'");
}

void validate(const DecoderConfig& cfg, std::size_t n_qubits) {
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) throw UsageError("alpha must be positive");
  if (!(cfg.beta >= 0.0) || !std::isfinite(cfg.beta)) throw UsageError("beta must be non-negative");
  if (cfg.mode == Mode::normalized && cfg.beta != 0.0) throw UsageError("normalized mode does not take beta");
  if (cfg.t_max < 1) throw UsageError("t_max must be at least 1");
  if (!(cfg.clip > 0.0)) throw UsageError("clip must be positive");
  for (std::size_t i = 0; i < cfg.alpha_grid.size(); ++i) {
    if (!(cfg.alpha_grid[i] > 0.0)) throw UsageError("alpha grid values must be positive");
    if (i > 0 && !(cfg.alpha_grid[i] < cfg.alpha_grid[i - 1])) throw UsageError("alpha grid must be strictly decreasing");
  }
  if (cfg.fixed_eps0 && !(*cfg.fixed_eps0 > 0.0 && *cfg.fixed_eps0 < 1.0)) throw UsageError("eps0 must lie in (0, 1)");
  if (cfg.schedule == Schedule::grouped) {
    std::vector<int> seen(n_qubits, 0);
    for (const auto& grp : cfg.groups) {
      for (auto q : grp) {
        if (q >= n_qubits) throw UsageError("group member " + std::to_string(q) + " outside the code");
        ++seen[q];
      }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
      throw UsageError("groups must partition the qubits");
  }
}

Pauli hard_decision(const LlrTriple& gamma) {
  int best = 0;
  for (int w = 1; w < 3; ++w) {
    if (gamma[static_cast<std::size_t>(w)] < gamma[static_cast<std::size_t>(best)]) best = w;
  }
  return gamma[static_cast<std::size_t>(best)] >= 0.0 ? Pauli::I : static_cast<Pauli>(best + 1);
}

DecodeResult decode(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg) {
  check_inputs(code, z, prior, cfg);
  LogEngine eng(code, z, prior, cfg);
  return run_schedule(eng, code, z, cfg);
}

DecodeResult decode_linear(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg) {
  check_inputs(code, z, prior, cfg);
  if (cfg.beta != 0.0 || cfg.mode != Mode::mbp) throw UsageError("linear-domain decoding supports mbp with beta = 0 only");
  LinearEngine eng(code, z, prior, cfg);
  return run_schedule(eng, code, z, cfg);
}

DecodeResult decode_adaptive(const Code& code, const Syndrome& z, const ChannelPrior& prior, const DecoderConfig& cfg,
                             bool linear) {
  if (cfg.alpha_grid.empty()) throw UsageError("adaptive decoding needs a non-empty alpha grid");
  DecoderConfig inner = cfg;
  inner.beta = 0.0;
  DecodeResult res;
  int total = 0;
  for (double a : cfg.alpha_grid) {
    inner.alpha = a;
    res = linear ? decode_linear(code, z, prior, inner) : decode(code, z, prior, inner);
    total += res.iterations;
    if (res.converged()) break;
  }
  res.total_iterations = total;
  return res;
}

std::vector<double> parse_alpha_grid(const std::string& text) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid number '" + s + "' in alpha grid '" + text + "'");
    }
    if (used != s.size()) throw UsageError("invalid number '" + s + "' in alpha grid '" + text + "'");
    return v;
  };
  auto round12 = [](double v) { return std::round(v * 1e12) / 1e12; };

  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("alpha grid range must be start:stop:step");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0) || !(start >= stop)) throw UsageError("alpha grid range must descend with a positive step");
    const auto count = static_cast<long>(std::floor((start - stop) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) grid.push_back(round12(start - static_cast<double>(i) * step));
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) grid.push_back(to_double(part));
  }
  if (grid.empty()) throw UsageError("alpha grid is empty");
  DecoderConfig probe;
  probe.alpha_grid = grid;
  validate(probe, 0);
  return grid;
}

}  // namespace mbp

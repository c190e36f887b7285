#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mbp/code.hpp"
#include "mbp/decoder.hpp"
#include "mbp/errors.hpp"
#include "mbp/report.hpp"
#include "mbp/sim.hpp"
#include "mbp/verify.hpp"

namespace {

using namespace mbp;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError("invalid " + what + ": '" + s + "'");
  return v;
}

// Built-in aliases, otherwise a check-matrix file.
Code resolve_code(const std::string& spec) {
  if (spec == "513") return gen_five_qubit();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string family = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (family == "surface") return gen_surface(to_int(args, "surface size"));
    if (family == "toric") return gen_toric(to_int(args, "toric size"));
    if (family == "bicycle") {
      const auto parts = split(args, ',');
      if (parts.size() != 4) throw UsageError("bicycle alias needs bicycle:N,K,k,seed");
      return gen_bicycle(to_int(parts[0], "N"), to_int(parts[1], "K"), to_int(parts[2], "row weight"),
                         static_cast<std::uint64_t>(to_int(parts[3], "seed")));
    }
  }
  std::ifstream probe(spec);
  if (!probe) throw IoError("cannot open code file '" + spec + "'");
  return load_check_matrix(spec);
}

// Lattice size for surface/toric names, block length otherwise.
std::size_t size_param(const Code& code) {
  const std::string& name = code.name();
  if (name.rfind("surface:", 0) == 0 || name.rfind("toric:", 0) == 0) {
    return static_cast<std::size_t>(std::stoul(name.substr(name.find(':') + 1)));
  }
  return code.n();
}

std::string weight_summary(const std::vector<std::size_t>& w) {
  const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  double mean = 0.0;
  for (auto v : w) mean += static_cast<double>(v);
  mean /= static_cast<double>(w.size());
  char buf[96];
  std::snprintf(buf, sizeof buf, "min %zu, max %zu, mean %.4g", *lo, *hi, mean);
  return buf;
}

void print_info(const Code& code) {
  std::cout << "name: " << code.name() << "\n"
            << "N: " << code.n() << "\n"
            << "M: " << code.checks().num_rows() << "\n"
            << "rank: " << code.checks().rank() << "\n"
            << "K: " << code.k() << "\n";
  if (code.distance()) std::cout << "D: " << *code.distance() << "\n";
  std::cout << "row weights: " << weight_summary(code.checks().row_weights()) << "\n"
            << "column weights: " << weight_summary(code.checks().column_weights()) << "\n";
}

struct GenArgs {
  std::string family;
  int L = 0;
  int n = 0;
  int k_logical = 0;
  int row_weight = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Code code = [&] {
    if (a.family == "513" || a.family == "five-qubit") return gen_five_qubit();
    if (a.family == "surface") return gen_surface(a.L);
    if (a.family == "toric") return gen_toric(a.L);
    if (a.family == "bicycle") return gen_bicycle(a.n, a.k_logical, a.row_weight, a.seed);
    throw UsageError("unknown family '" + a.family + "'");
  }();
  if (a.out.empty()) {
    std::cout << format_check_matrix(code);
  } else {
    std::ofstream probe(a.out);
    if (!probe) throw IoError("cannot write '" + a.out + "'");
    probe.close();
    save_check_matrix(code, a.out);
    std::cerr << "wrote " << a.out << ": M=" << code.checks().num_rows() << " N=" << code.n() << " K=" << code.k()
              << "\n";
  }
  return 0;
}

struct DecodeArgs {
  std::string code;
  std::string error;
  std::string syndrome;
  double alpha = 1.0;
  std::string alpha_grid;
  double beta = 0.0;
  std::string schedule = "parallel";
  std::string mode = "mbp";
  std::string domain = "log";
  int tmax = 100;
  double eps = 0.01;
  std::optional<double> eps0;
  std::string trace;
};

Syndrome parse_syndrome(const std::string& text, std::size_t m) {
  Syndrome z;
  for (char c : text) {
    if (c == '0' || c == '1') {
      z.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != ',') {
      throw ParseError(std::string("invalid syndrome character '") + c + "'");
    }
  }
  if (z.size() != m) {
    throw UsageError("syndrome has " + std::to_string(z.size()) + " bits, code has " + std::to_string(m) + " checks");
  }
  return z;
}

int cmd_decode(const DecodeArgs& a) {
  const Code code = resolve_code(a.code);
  DecoderConfig cfg;
  cfg.alpha = a.alpha;
  cfg.beta = a.beta;
  cfg.mode = parse_mode(a.mode);
  cfg.schedule = parse_schedule(a.schedule);
  cfg.t_max = a.tmax;
  cfg.fixed_eps0 = a.eps0;
  cfg.trace_energy = !a.trace.empty();
  if (!a.alpha_grid.empty()) cfg.alpha_grid = parse_alpha_grid(a.alpha_grid);
  if (cfg.schedule == Schedule::grouped) {
    const auto l = static_cast<int>(std::lround(std::sqrt(static_cast<double>(code.n()))));
    if (static_cast<std::size_t>(l * l) != code.n()) throw UsageError("grouped schedule needs a square lattice code");
    cfg.groups = lattice_blocks(l);
  }
  const Domain domain = parse_domain(a.domain);

  std::optional<PauliString> error;
  Syndrome z;
  if (!a.error.empty()) {
    const bool sparse = a.error.find_first_of("0123456789") != std::string::npos;
    error = sparse ? PauliString::parse_sparse(code.n(), a.error) : PauliString::parse(a.error);
    if (error->size() != code.n()) {
      throw UsageError("error has length " + std::to_string(error->size()) + ", code has " +
                       std::to_string(code.n()) + " qubits");
    }
    z = syndrome(*error, code.checks());
  } else {
    z = parse_syndrome(a.syndrome, code.checks().num_rows());
  }

  if (!(a.eps > 0.0 && a.eps < 1.0)) throw UsageError("--eps must lie in (0, 1)");
  const ChannelPrior prior = depolarizing_prior(code.n(), a.eps0.value_or(a.eps));
  const bool linear = domain == Domain::linear;
  DecodeResult r;
  if (!cfg.alpha_grid.empty()) {
    r = decode_adaptive(code, z, prior, cfg, linear);
  } else {
    r = linear ? decode_linear(code, z, prior, cfg) : decode(code, z, prior, cfg);
  }

  std::cout << "status: " << (r.converged() ? "CONVERGE" : "FAIL") << "\n"
            << "estimate: " << r.estimate.to_string() << "\n"
            << "support: " << r.estimate.to_sparse_string() << "\n"
            << "iterations: " << r.iterations << "\n";
  if (!cfg.alpha_grid.empty()) {
    std::cout << "alpha_used: " << r.alpha_used << "\n"
              << "total_iterations: " << r.total_iterations << "\n";
  }
  if (error) std::cout << "outcome: " << to_string(classify(*error, r, z, code)) << "\n";

  if (!a.trace.empty()) {
    std::ofstream out(a.trace);
    if (!out) throw IoError("cannot write trace file '" + a.trace + "'");
    out << "iter,J_S_bounded,J_S_mismatch\n";
    char buf[96];
    for (const auto& rec : r.energy_trace) {
      std::snprintf(buf, sizeof buf, "%d,%.10g,%d\n", rec.iter, rec.j_s_bounded, rec.j_s_mismatch);
      out << buf;
    }
  }
  return r.converged() ? 0 : kExitFail;
}

struct SimArgs {
  std::vector<std::string> codes;
  std::string eps_list;
  std::optional<double> alpha;
  std::string alpha_grid;
  double beta = 0.0;
  std::string schedule = "parallel";
  std::string mode = "mbp";
  int tmax = 100;
  std::optional<double> eps0;
  std::uint64_t events = 100;
  std::uint64_t max_trials = 10'000'000;
  std::uint64_t seed = 1;
  std::string domain = "log";
  unsigned threads = 0;
  std::string out;
};

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size() || !(v > 0.0 && v < 1.0)) throw UsageError("invalid eps value '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--eps-list is empty");
  return out;
}

int cmd_simulate(const SimArgs& a) {
  if (a.alpha && !a.alpha_grid.empty()) throw UsageError("--alpha and --alpha-grid are mutually exclusive");
  const auto eps_values = parse_eps_list(a.eps_list);
  DecoderConfig cfg;
  cfg.alpha = a.alpha.value_or(1.0);
  cfg.beta = a.beta;
  cfg.mode = parse_mode(a.mode);
  cfg.schedule = parse_schedule(a.schedule);
  cfg.t_max = a.tmax;
  cfg.fixed_eps0 = a.eps0;
  if (!a.alpha_grid.empty()) cfg.alpha_grid = parse_alpha_grid(a.alpha_grid);
  SimOptions opts;
  opts.domain = parse_domain(a.domain);
  opts.threads = a.threads;
  StopRule stop{a.events, a.max_trials};
  if (stop.min_events == 0 || stop.max_trials == 0) throw UsageError("--events and --max-trials must be positive");

  std::vector<Code> codes;
  for (const auto& spec : a.codes) codes.push_back(resolve_code(spec));

  std::vector<PointRecord> records;
  for (const auto& code : codes) {
    DecoderConfig point_cfg = cfg;
    if (point_cfg.schedule == Schedule::grouped) {
      const std::size_t l = size_param(code);
      if (l * l != code.n()) throw UsageError("grouped schedule needs a lattice code");
      point_cfg.groups = lattice_blocks(static_cast<int>(l));
    }
    for (double eps : eps_values) {
      PointRecord rec;
      rec.code = code.name();
      rec.size_param = size_param(code);
      rec.eps = eps;
      rec.alpha = point_cfg.alpha_grid.empty() ? point_cfg.alpha : point_cfg.alpha_grid.front();
      rec.beta = point_cfg.beta;
      rec.schedule = to_string(point_cfg.schedule);
      rec.stats = run_point(code, point_cfg, eps, stop, a.seed, opts);
      std::cerr << code.name() << " eps=" << eps << " n_tot=" << rec.stats.n_tot << " n_e=" << rec.stats.n_e << "\n";
      records.push_back(std::move(rec));
    }
  }

  if (a.out.empty()) {
    write_csv(std::cout, records);
    return 0;
  }
  std::ofstream csv(a.out);
  if (!csv) throw IoError("cannot write '" + a.out + "'");
  write_csv(csv, records);

  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  nlohmann::json meta = {
      {"timestamp", stamp},
      {"codes", a.codes},
      {"mode", a.mode},
      {"schedule", a.schedule},
      {"t_max", a.tmax},
      {"domain", a.domain},
      {"min_events", stop.min_events},
      {"max_trials", stop.max_trials},
      {"seed", a.seed},
  };
  if (a.eps0) meta["eps0"] = *a.eps0;
  if (!cfg.alpha_grid.empty()) meta["alpha_grid"] = cfg.alpha_grid;
  const std::string json_path = a.out + ".json";
  std::ofstream js(json_path);
  if (!js) throw IoError("cannot write '" + json_path + "'");
  js << sweep_json(records, meta).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternary belief-propagation decoders for stabilizer codes"};
  app.require_subcommand(1);

  auto* code_cmd = app.add_subcommand("code", "Generate or inspect check-matrix files");
  code_cmd->require_subcommand(1);
  GenArgs gen;
  auto* gen_cmd = code_cmd->add_subcommand("gen", "Build a code and write its check matrix");
  gen_cmd->add_option("--family", gen.family, "513, surface, toric or bicycle")->required();
  gen_cmd->add_option("--L", gen.L, "Lattice size");
  gen_cmd->add_option("--n", gen.n, "Bicycle block length");
  gen_cmd->add_option("--k-logical", gen.k_logical, "Bicycle logical qubits");
  gen_cmd->add_option("--row-weight", gen.row_weight, "Bicycle row weight");
  gen_cmd->add_option("--seed", gen.seed, "Bicycle seed");
  gen_cmd->add_option("-o,--output", gen.out, "Output file (stdout when absent)");
  std::string info_path;
  auto* info_cmd = code_cmd->add_subcommand("info", "Print code parameters");
  info_cmd->add_option("code", info_path, "Alias or file")->required();
  std::string load_path;
  std::string load_out;
  auto* load_cmd = code_cmd->add_subcommand("load", "Validate a check-matrix file and optionally rewrite it");
  load_cmd->add_option("code", load_path, "File")->required();
  load_cmd->add_option("-o,--output", load_out, "Rewrite in canonical form");

  DecodeArgs dec;
  auto* dec_cmd = app.add_subcommand("decode", "Decode one error or syndrome");
  dec_cmd->add_option("--code", dec.code, "Alias or file")->required();
  auto* err_opt = dec_cmd->add_option("--error", dec.error, "Error as IXYZ string or sparse form 'X3 Z22'");
  auto* syn_opt = dec_cmd->add_option("--syndrome", dec.syndrome, "Syndrome bits");
  err_opt->excludes(syn_opt);
  dec_cmd->add_option("--alpha", dec.alpha, "Step-size divisor");
  dec_cmd->add_option("--alpha-grid", dec.alpha_grid, "Adaptive grid, start:stop:step or a comma list");
  dec_cmd->add_option("--beta", dec.beta, "Inhibition weight");
  dec_cmd->add_option("--schedule", dec.schedule, "parallel, serial or grouped");
  dec_cmd->add_option("--mode", dec.mode, "mbp or normalized");
  dec_cmd->add_option("--domain", dec.domain, "log or linear");
  dec_cmd->add_option("--tmax", dec.tmax, "Iteration limit");
  dec_cmd->add_option("--eps", dec.eps, "Depolarizing rate of the prior");
  dec_cmd->add_option("--eps0,--fixed-init", dec.eps0, "Fixed prior rate, overrides --eps");
  dec_cmd->add_option("--trace", dec.trace, "Write the per-iteration energy CSV here");

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo sweep over depolarizing rates");
  sim_cmd->add_option("--code", sim.codes, "Alias or file; repeatable")->required();
  sim_cmd->add_option("--eps-list", sim.eps_list, "Comma-separated rates")->required();
  sim_cmd->add_option("--alpha", sim.alpha, "Fixed alpha");
  sim_cmd->add_option("--alpha-grid", sim.alpha_grid, "Adaptive grid");
  sim_cmd->add_option("--beta", sim.beta, "Inhibition weight");
  sim_cmd->add_option("--schedule", sim.schedule, "parallel, serial or grouped");
  sim_cmd->add_option("--mode", sim.mode, "mbp or normalized");
  sim_cmd->add_option("--tmax", sim.tmax, "Iteration limit");
  sim_cmd->add_option("--eps0,--fixed-init", sim.eps0, "Fixed prior rate");
  sim_cmd->add_option("--events", sim.events, "Error events per point");
  sim_cmd->add_option("--max-trials", sim.max_trials, "Trial cap per point");
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--domain", sim.domain, "log or linear");
  sim_cmd->add_option("--threads", sim.threads, "Worker threads, 0 for all cores");
  sim_cmd->add_option("-o,--output", sim.out, "CSV path; a JSON mirror is written next to it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*code_cmd) {
      if (*gen_cmd) return cmd_gen(gen);
      if (*info_cmd) {
        print_info(resolve_code(info_path));
        return 0;
      }
      const Code code = resolve_code(load_path);
      print_info(code);
      if (!load_out.empty()) save_check_matrix(code, load_out);
      return 0;
    }
    if (*dec_cmd) {
      if (dec.error.empty() && dec.syndrome.empty()) throw UsageError("decode needs --error or --syndrome");
      return cmd_decode(dec);
    }
    return cmd_simulate(sim);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

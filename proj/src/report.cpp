#include "mbp/report.hpp"

#include <cstdio>
#include <sstream>

namespace mbp {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string csv_header() {
  return "code,L_or_N,eps,alpha,beta,schedule,n_tot,n0,n_e,n_u,rate,ci_lo,ci_hi,tau_conv,tau_all";
}

std::string csv_row(const PointRecord& rec) {
  const auto& s = rec.stats;
  const auto [lo, hi] = s.n_tot ? confidence_interval(s.n_e, s.n_tot) : std::pair{0.0, 1.0};
  std::ostringstream out;
  out << '"' << rec.code << '"' << ',' << rec.size_param << ',' << fmt(rec.eps) << ',' << fmt(rec.alpha) << ','
      << fmt(rec.beta) << ',' << rec.schedule << ',' << s.n_tot << ',' << s.n0 << ',' << s.n_e << ',' << s.n_u << ','
      << fmt(s.rate()) << ',' << fmt(lo) << ',' << fmt(hi) << ',' << fmt(s.tau_conv()) << ',' << fmt(s.tau_all());
  return out.str();
}

void write_csv(std::ostream& out, const std::vector<PointRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

nlohmann::json point_json(const PointRecord& rec) {
  const auto& s = rec.stats;
  const auto [lo, hi] = s.n_tot ? confidence_interval(s.n_e, s.n_tot) : std::pair{0.0, 1.0};
  nlohmann::json j = {{"code", rec.code},   {"L_or_N", rec.size_param}, {"eps", rec.eps},
                      {"alpha", rec.alpha}, {"beta", rec.beta},         {"schedule", rec.schedule},
                      {"n_tot", s.n_tot},   {"n0", s.n0},               {"n_e", s.n_e},
                      {"n_u", s.n_u},       {"rate", s.rate()},         {"ci_lo", lo},
                      {"ci_hi", hi},        {"tau_conv", s.tau_conv()}, {"tau_all", s.tau_all()}};
  if (!s.alpha_hist.empty()) {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [alpha, count] : s.alpha_hist) hist.push_back({{"alpha", alpha}, {"count", count}});
    j["alpha_hist"] = hist;
  }
  return j;
}

nlohmann::json sweep_json(const std::vector<PointRecord>& records, const nlohmann::json& metadata) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& r : records) points.push_back(point_json(r));
  return {{"metadata", metadata}, {"points", points}};
}

}  // namespace mbp

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mbp/stats.hpp"

namespace mbp {

/// One simulated (code, eps) point ready for serialization.
struct PointRecord {
  std::string code;
  /// Lattice size L for surface and toric codes, block length N otherwise.
  std::size_t size_param = 0;
  double eps = 0.0;
  /// Fixed alpha, or the largest grid value for adaptive runs.
  double alpha = 1.0;
  double beta = 0.0;
  std::string schedule;
  TrialStats stats;
};

std::string csv_header();
std::string csv_row(const PointRecord& rec);
void write_csv(std::ostream& out, const std::vector<PointRecord>& records);

nlohmann::json point_json(const PointRecord& rec);
/// {"metadata": ..., "points": [...]}.
nlohmann::json sweep_json(const std::vector<PointRecord>& records, const nlohmann::json& metadata);

}  // namespace mbp

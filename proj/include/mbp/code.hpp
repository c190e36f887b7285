#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbp/gf2.hpp"
#include "mbp/pauli.hpp"

namespace mbp {

using Syndrome = std::vector<std::uint8_t>;

/// One Tanner-graph edge: check `check` touches qubit `qubit` with the
/// non-identity entry `pauli` = S_mn.
struct Edge {
  std::uint32_t check;
  std::uint32_t qubit;
  Pauli pauli;
};

/// Bipartite adjacency of a check matrix. Edges are stored check-major; each
/// qubit's incident edge list is in ascending check order.
struct TannerGraph {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> check_begin;  // size M+1, CSR offsets into edges
  std::vector<std::vector<std::uint32_t>> qubit_edges;

  std::size_t num_checks() const { return check_begin.size() - 1; }
  std::size_t num_qubits() const { return qubit_edges.size(); }
};

/// M x N quaternary check matrix whose rows pairwise commute.
class CheckMatrix {
 public:
  /// Validates equal lengths and pairwise commutation.
  explicit CheckMatrix(std::vector<PauliString> rows);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& rows() const { return rows_; }
  const PauliString& row(std::size_t m) const { return rows_[m]; }
  const TannerGraph& tanner() const { return tanner_; }

  /// Rank of the 2N-column symplectic image over GF(2).
  std::size_t rank() const { return basis_.rank(); }
  /// Row-reduced basis of the symplectic images [x | z] of the rows.
  const gf2::EchelonBasis& basis() const { return basis_; }

  std::vector<std::size_t> row_weights() const;
  std::vector<std::size_t> column_weights() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> rows_;
  TannerGraph tanner_;
  gf2::EchelonBasis basis_;
};

/// Symplectic image [x | z] of length 2N.
gf2::BitVec symplectic(const PauliString& p);
PauliString from_symplectic(const gf2::BitVec& v, std::size_t n);

struct LogicalPair {
  PauliString x;
  PauliString z;
};

/// A stabilizer code: check matrix plus derived logical operators.
class Code {
 public:
  Code(std::string name, CheckMatrix checks, std::optional<std::size_t> distance = std::nullopt);
  /// Uses caller-supplied logicals after validating them.
  Code(std::string name, CheckMatrix checks, std::vector<LogicalPair> logicals,
       std::optional<std::size_t> distance);

  const std::string& name() const { return name_; }
  const CheckMatrix& checks() const { return checks_; }
  std::size_t n() const { return checks_.num_qubits(); }
  std::size_t k() const { return n() - checks_.rank(); }
  std::optional<std::size_t> distance() const { return distance_; }
  const std::vector<LogicalPair>& logicals() const { return logicals_; }

 private:
  std::string name_;
  CheckMatrix checks_;
  std::optional<std::size_t> distance_;
  std::vector<LogicalPair> logicals_;
};

/// z_m = <E, S_m> for every row.
Syndrome syndrome(const PauliString& e, const CheckMatrix& checks);

/// K symplectic pairs spanning N(S)/S with <X_j, Z_k> = delta_jk.
std::vector<LogicalPair> compute_logicals(const CheckMatrix& checks);

/// Throws ValidationError unless the pairs commute with all rows, pair
/// symplectically as the identity, and lie outside the row space.
void validate_logicals(const CheckMatrix& checks, const std::vector<LogicalPair>& logicals);

// Built-in constructions.
Code gen_five_qubit();
/// Rotated [[L^2,1,L]] surface code, L odd >= 3, qubits row-major from 1.
Code gen_surface(int L);
/// Rotated [[L^2,2,L]] toric code, L even >= 4, all L^2 plaquettes kept.
Code gen_toric(int L);
/// MacKay-style bicycle code [[n, k_logical]] with row weight `row_weight`.
Code gen_bicycle(int n, int k_logical, int row_weight, std::uint64_t seed);

/// 2x2 qubit blocks of an L x L lattice as 0-based groups, for the
/// grouped-serial schedule.
std::vector<std::vector<std::uint32_t>> lattice_blocks(int L);

// Check-matrix file format.
Code load_check_matrix(const std::string& path);
Code parse_check_matrix(const std::string& text, const std::string& name = "file");
std::string format_check_matrix(const Code& code, bool with_logicals = true);
void save_check_matrix(const Code& code, const std::string& path, bool with_logicals = true);

}  // namespace mbp

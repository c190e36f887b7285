#include "mbp/code.hpp"

#include <algorithm>
#include <deque>

namespace mbp {
namespace {

// Swaps the x and z halves so that a plain dot product computes <a, .>.
gf2::BitVec swapped(const gf2::BitVec& v, std::size_t n) {
  gf2::BitVec out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v.get(i)) out.set(n + i);
    if (v.get(n + i)) out.set(i);
  }
  return out;
}

TannerGraph build_tanner(const std::vector<PauliString>& rows, std::size_t n) {
  TannerGraph g;
  g.check_begin.reserve(rows.size() + 1);
  g.check_begin.push_back(0);
  g.qubit_edges.assign(n, {});
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (std::size_t q = 0; q < n; ++q) {
      const Pauli p = rows[m][q];
      if (p == Pauli::I) continue;
      g.qubit_edges[q].push_back(static_cast<std::uint32_t>(g.edges.size()));
      g.edges.push_back({static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(q), p});
    }
    g.check_begin.push_back(static_cast<std::uint32_t>(g.edges.size()));
  }
  return g;
}

}  // namespace

gf2::BitVec symplectic(const PauliString& p) {
  const std::size_t n = p.size();
  gf2::BitVec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Pauli q = p[i];
    if (x_bit(q)) v.set(i);
    if (z_bit(q)) v.set(n + i);
  }
  return v;
}

PauliString from_symplectic(const gf2::BitVec& v, std::size_t n) {
  PauliString p(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, pauli_from_bits(v.get(i), v.get(n + i)));
  return p;
}

CheckMatrix::CheckMatrix(std::vector<PauliString> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("check matrix has no rows");
  n_ = rows_.front().size();
  if (n_ == 0) throw ValidationError("check matrix has no columns");
  for (const auto& r : rows_) {
    if (r.size() != n_) throw ValidationError("check matrix rows have inconsistent lengths");
  }
  tanner_ = build_tanner(rows_, n_);

  // Pairwise commutation, visiting only row pairs that share a qubit.
  std::vector<std::uint8_t> parity(rows_.size());
  for (std::size_t m = 0; m < rows_.size(); ++m) {
    std::fill(parity.begin(), parity.end(), 0);
    for (auto e = tanner_.check_begin[m]; e < tanner_.check_begin[m + 1]; ++e) {
      const Edge& mine = tanner_.edges[e];
      for (auto other : tanner_.qubit_edges[mine.qubit]) {
        const Edge& theirs = tanner_.edges[other];
        if (theirs.check > m) parity[theirs.check] ^= commutes1(mine.pauli, theirs.pauli);
      }
    }
    for (std::size_t m2 = m + 1; m2 < rows_.size(); ++m2) {
      if (parity[m2]) {
        throw ValidationError("rows anticommute: row " + std::to_string(m + 1) + " and row " +
                              std::to_string(m2 + 1));
      }
    }
  }

  std::vector<gf2::BitVec> images;
  images.reserve(rows_.size());
  for (const auto& r : rows_) images.push_back(symplectic(r));
  basis_ = gf2::EchelonBasis(std::move(images));
}

std::vector<std::size_t> CheckMatrix::row_weights() const {
  std::vector<std::size_t> w;
  w.reserve(rows_.size());
  for (std::size_t m = 0; m < rows_.size(); ++m) w.push_back(tanner_.check_begin[m + 1] - tanner_.check_begin[m]);
  return w;
}

std::vector<std::size_t> CheckMatrix::column_weights() const {
  std::vector<std::size_t> w;
  w.reserve(n_);
  for (const auto& edges : tanner_.qubit_edges) w.push_back(edges.size());
  return w;
}

Syndrome syndrome(const PauliString& e, const CheckMatrix& checks) {
  if (e.size() != checks.num_qubits()) {
    throw UsageError("error length " + std::to_string(e.size()) + " does not match code length " +
                     std::to_string(checks.num_qubits()));
  }
  Syndrome z(checks.num_rows(), 0);
  const auto& g = checks.tanner();
  for (std::size_t m = 0; m < z.size(); ++m) {
    int s = 0;
    for (auto k = g.check_begin[m]; k < g.check_begin[m + 1]; ++k) {
      s ^= commutes1(e[g.edges[k].qubit], g.edges[k].pauli);
    }
    z[m] = static_cast<std::uint8_t>(s);
  }
  return z;
}

std::vector<LogicalPair> compute_logicals(const CheckMatrix& checks) {
  const std::size_t n = checks.num_qubits();
  std::vector<gf2::BitVec> swapped_rows;
  swapped_rows.reserve(checks.basis().rank());
  for (const auto& r : checks.basis().rows()) swapped_rows.push_back(swapped(r, n));
  const auto normalizer = gf2::nullspace(swapped_rows, 2 * n);

  // Complement of the stabilizer space inside the normalizer.
  gf2::EchelonBasis span = checks.basis();
  std::deque<gf2::BitVec> pool;
  for (const auto& v : normalizer) {
    if (span.insert(v)) pool.push_back(v);
  }

  // Symplectic Gram-Schmidt.
  std::vector<LogicalPair> out;
  while (!pool.empty()) {
    gf2::BitVec v = std::move(pool.front());
    pool.pop_front();
    const gf2::BitVec sv = swapped(v, n);
    auto partner = std::find_if(pool.begin(), pool.end(), [&](const gf2::BitVec& w) { return w.dot(sv); });
    if (partner == pool.end()) throw ValidationError("logical operators: no symplectic partner found");
    gf2::BitVec w = std::move(*partner);
    pool.erase(partner);
    const gf2::BitVec sw = swapped(w, n);
    for (auto& u : pool) {
      const bool a = u.dot(sw);
      const bool b = u.dot(sv);
      if (a) u ^= v;
      if (b) u ^= w;
    }
    out.push_back({from_symplectic(v, n), from_symplectic(w, n)});
  }
  return out;
}

void validate_logicals(const CheckMatrix& checks, const std::vector<LogicalPair>& logicals) {
  const std::size_t n = checks.num_qubits();
  if (logicals.size() != n - checks.rank()) {
    throw ValidationError("expected " + std::to_string(n - checks.rank()) + " logical pairs, got " +
                          std::to_string(logicals.size()));
  }
  std::vector<const PauliString*> ops;
  for (const auto& pair : logicals) {
    if (pair.x.size() != n || pair.z.size() != n) throw ValidationError("logical operator has wrong length");
    ops.push_back(&pair.x);
    ops.push_back(&pair.z);
  }
  for (const auto* op : ops) {
    for (const auto& row : checks.rows()) {
      if (commutes(*op, row)) throw ValidationError("logical operator anticommutes with a stabilizer row");
    }
    if (checks.basis().contains(symplectic(*op))) throw ValidationError("logical operator lies in the stabilizer group");
  }
  for (std::size_t j = 0; j < logicals.size(); ++j) {
    for (std::size_t k = 0; k < logicals.size(); ++k) {
      const int expect = j == k ? 1 : 0;
      if (commutes(logicals[j].x, logicals[k].z) != expect ||
          (j != k && (commutes(logicals[j].x, logicals[k].x) || commutes(logicals[j].z, logicals[k].z)))) {
        throw ValidationError("logical operators are not symplectically paired");
      }
    }
  }
}

Code::Code(std::string name, CheckMatrix checks, std::optional<std::size_t> distance)
    : name_(std::move(name)), checks_(std::move(checks)), distance_(distance) {
  logicals_ = compute_logicals(checks_);
}

Code::Code(std::string name, CheckMatrix checks, std::vector<LogicalPair> logicals,
           std::optional<std::size_t> distance)
    : name_(std::move(name)), checks_(std::move(checks)), distance_(distance), logicals_(std::move(logicals)) {
  validate_logicals(checks_, logicals_);
}

}  // namespace mbp

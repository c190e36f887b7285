#include <algorithm>
#include <numeric>
#include <random>

#include "mbp/code.hpp"

namespace mbp {
namespace {

PauliString plaquette(std::size_t n, Pauli type, std::initializer_list<std::size_t> qubits0) {
  PauliString p(n);
  for (auto q : qubits0) p.set(q, type);
  return p;
}

}  // namespace

Code gen_five_qubit() {
  std::vector<PauliString> rows = {
      PauliString::parse("XZZXI"),
      PauliString::parse("IXZZX"),
      PauliString::parse("XIXZZ"),
      PauliString::parse("ZXIXZ"),
  };
  return Code("513", CheckMatrix(std::move(rows)), 3);
}

// Faces of the L x L qubit grid (row r, column c, 0-based) are indexed by
// their top-left qubit. Face (r, c) is Z-type when r + c is even and X-type
// otherwise. Boundary half-faces follow the same parity rule on the virtual
// row/column just outside the grid, so the top and bottom edges carry
// weight-2 X checks and the left and right edges carry weight-2 Z checks.
// For L = 5 this gives X1X2 and Z1Z2Z6Z7.
Code gen_surface(int L) {
  if (L < 3 || L % 2 == 0) throw UsageError("surface code needs odd L >= 3, got " + std::to_string(L));
  const auto l = static_cast<std::size_t>(L);
  const std::size_t n = l * l;
  auto q = [l](std::size_t r, std::size_t c) { return r * l + c; };
  auto type = [](long r, long c) { return ((r + c) % 2 + 2) % 2 == 0 ? Pauli::Z : Pauli::X; };

  std::vector<PauliString> rows;
  for (std::size_t r = 0; r + 1 < l; ++r) {
    for (std::size_t c = 0; c + 1 < l; ++c) {
      rows.push_back(plaquette(n, type(static_cast<long>(r), static_cast<long>(c)),
                               {q(r, c), q(r, c + 1), q(r + 1, c), q(r + 1, c + 1)}));
    }
  }
  for (std::size_t c = 0; c + 1 < l; ++c) {
    if (type(-1, static_cast<long>(c)) == Pauli::X) rows.push_back(plaquette(n, Pauli::X, {q(0, c), q(0, c + 1)}));
    if (type(static_cast<long>(l) - 1, static_cast<long>(c)) == Pauli::X)
      rows.push_back(plaquette(n, Pauli::X, {q(l - 1, c), q(l - 1, c + 1)}));
  }
  for (std::size_t r = 0; r + 1 < l; ++r) {
    if (type(static_cast<long>(r), -1) == Pauli::Z) rows.push_back(plaquette(n, Pauli::Z, {q(r, 0), q(r + 1, 0)}));
    if (type(static_cast<long>(r), static_cast<long>(l) - 1) == Pauli::Z)
      rows.push_back(plaquette(n, Pauli::Z, {q(r, l - 1), q(r + 1, l - 1)}));
  }
  return Code("surface:" + std::to_string(L), CheckMatrix(std::move(rows)), l);
}

// Periodic version of the surface layout: every face (r, c) wraps to
// (r + 1) mod L and (c + 1) mod L. Even L keeps the checkerboard consistent.
Code gen_toric(int L) {
  if (L < 4 || L % 2 != 0) throw UsageError("toric code needs even L >= 4, got " + std::to_string(L));
  const auto l = static_cast<std::size_t>(L);
  const std::size_t n = l * l;
  auto q = [l](std::size_t r, std::size_t c) { return (r % l) * l + (c % l); };
  std::vector<PauliString> rows;
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = 0; c < l; ++c) {
      const Pauli type = (r + c) % 2 == 0 ? Pauli::Z : Pauli::X;
      rows.push_back(plaquette(n, type, {q(r, c), q(r, c + 1), q(r + 1, c), q(r + 1, c + 1)}));
    }
  }
  return Code("toric:" + std::to_string(L), CheckMatrix(std::move(rows)), l);
}

std::vector<std::vector<std::uint32_t>> lattice_blocks(int L) {
  if (L < 2) throw UsageError("lattice blocks need L >= 2");
  const auto l = static_cast<std::uint32_t>(L);
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::uint32_t r = 0; r < l; r += 2) {
    for (std::uint32_t c = 0; c < l; c += 2) {
      std::vector<std::uint32_t> g;
      for (std::uint32_t dr = 0; dr < 2 && r + dr < l; ++dr) {
        for (std::uint32_t dc = 0; dc < 2 && c + dc < l; ++dc) g.push_back((r + dr) * l + c + dc);
      }
      groups.push_back(std::move(g));
    }
  }
  return groups;
}

// H = [C, C^T] for a random circulant C of row weight k/2; rows are deleted
// greedily, always removing the row whose support has the largest total
// current column weight (the deletion that most reduces column-weight
// variance), ties broken by the seeded RNG. Both X-type and Z-type checks
// use the surviving rows of H.
Code gen_bicycle(int n, int k_logical, int row_weight, std::uint64_t seed) {
  if (n <= 0 || n % 2 != 0) throw UsageError("bicycle code needs even n");
  if (row_weight <= 0 || row_weight % 2 != 0) throw UsageError("bicycle row weight must be even and positive");
  if (k_logical < 0 || k_logical >= n || (n - k_logical) % 2 != 0)
    throw UsageError("bicycle code needs 0 <= k < n with n - k even");
  const int half = n / 2;
  const int keep = (n - k_logical) / 2;
  if (row_weight > half) throw UsageError("bicycle row weight must be <= n/2");
  if (keep < 1 || keep > half) throw UsageError("bicycle code: infeasible (n, k) combination");

  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Support of the first row of C: partial Fisher-Yates on raw engine output.
    std::vector<int> cols(static_cast<std::size_t>(half));
    std::iota(cols.begin(), cols.end(), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(row_weight / 2); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (cols.size() - i));
      std::swap(cols[i], cols[j]);
    }
    std::vector<int> first(cols.begin(), cols.begin() + row_weight / 2);

    // Row i of H: C has ones at (i + s) mod half; C^T has ones at (i - s) mod half.
    std::vector<std::vector<int>> support(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) {
      for (int s : first) {
        support[static_cast<std::size_t>(i)].push_back((i + s) % half);
        support[static_cast<std::size_t>(i)].push_back(half + ((i - s) % half + half) % half);
      }
    }

    std::vector<int> colw(static_cast<std::size_t>(n), 0);
    for (const auto& row : support) {
      for (int c : row) ++colw[static_cast<std::size_t>(c)];
    }
    std::vector<bool> alive(static_cast<std::size_t>(half), true);
    for (int deleted = 0; deleted < half - keep; ++deleted) {
      long best = -1;
      std::vector<int> ties;
      for (int i = 0; i < half; ++i) {
        if (!alive[static_cast<std::size_t>(i)]) continue;
        long score = 0;
        for (int c : support[static_cast<std::size_t>(i)]) score += colw[static_cast<std::size_t>(c)];
        if (score > best) {
          best = score;
          ties.assign(1, i);
        } else if (score == best) {
          ties.push_back(i);
        }
      }
      const int victim = ties[static_cast<std::size_t>(rng() % ties.size())];
      alive[static_cast<std::size_t>(victim)] = false;
      for (int c : support[static_cast<std::size_t>(victim)]) --colw[static_cast<std::size_t>(c)];
    }

    std::vector<PauliString> rows;
    for (Pauli type : {Pauli::X, Pauli::Z}) {
      for (int i = 0; i < half; ++i) {
        if (!alive[static_cast<std::size_t>(i)]) continue;
        PauliString row(static_cast<std::size_t>(n));
        for (int c : support[static_cast<std::size_t>(i)]) row.set(static_cast<std::size_t>(c), type);
        rows.push_back(std::move(row));
      }
    }
    CheckMatrix checks(std::move(rows));
    // Resample when the kept rows are dependent, so that K matches the request.
    if (checks.rank() != static_cast<std::size_t>(2 * keep)) continue;
    return Code("bicycle:" + std::to_string(n) + "," + std::to_string(k_logical) + "," +
                    std::to_string(row_weight) + "," + std::to_string(seed),
                std::move(checks));
  }
  throw UsageError("bicycle code: no full-rank instance found for these parameters");
}

}  // namespace mbp

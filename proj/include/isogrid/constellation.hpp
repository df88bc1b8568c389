#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isogrid/geometry.hpp"

namespace isogrid {

// A set of grid points; `points` is kept sorted and duplicate free.
struct Constellation {
  GridDims dims;
  std::vector<GridPoint> points;

  // Sorts, rejects duplicates and out-of-bounds points (InvalidArgument).
  static Constellation make(const GridDims& dims, std::vector<GridPoint> points);
  std::size_t size() const { return points.size(); }
};

// No three points form an isosceles triangle of nonzero area.
bool is_isosceles_free(const Constellation& c);

struct SolverOptions {
  std::uint64_t node_budget = 100'000'000;
  std::int64_t cell_cap = 30;  // exact search refuses larger grids; hard limit 64
  bool use_seeds = true;
  int threads = 0;  // 0: OpenMP default
};

struct ConstellationResult {
  std::int64_t t_value = 0;  // T(n,k)
  std::int64_t s_value = 1;  // S(n,k) = T(n,k) + 1
  Constellation witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
  // False when the node budget ran out: t_value is then only a lower bound.
  bool exact = true;
};

// Exact maximum isosceles-free constellation by depth-first branch and bound.
//
// Cells are visited row-major in the orientation with rows >= cols (so for a
// grid wider than tall the order is column-major in the caller's
// coordinates). "Include" is explored before "exclude", which makes the
// reported witness the lexicographically smallest optimum in that order.
// Besides the remaining-cell count, the bound uses T of the strip of rows
// still undecided, which is computed first by the same search and cached.
// The first included cell is restricted to the smallest cell of its orbit
// under the grid's dihedral symmetries. Subtrees rooted at different first
// cells run in parallel; the result does not depend on the worker count.
class ConstellationSolver {
 public:
  explicit ConstellationSolver(SolverOptions options = {}) : options_(options) {}

  // Throws ResourceRefused when rows*cols exceeds the cell cap.
  ConstellationResult solve(const GridDims& dims);

  const SolverOptions& options() const { return options_; }

 private:
  std::int64_t strip_value(std::int64_t rows, std::int64_t cols);
  ConstellationResult solve_oriented(std::int64_t rows, std::int64_t cols);

  SolverOptions options_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> exact_cache_;
};

ConstellationResult max_isosceles_free(const GridDims& dims, const SolverOptions& options = {});

// Exhaustive maximum over all 2^cells subsets; test oracle for small grids.
std::int64_t brute_force_max_isosceles_free(const GridDims& dims);

// The n x 3 constellations with n+1 points (odd n) and n+2 points (even n),
// given in 1-based (a, b) coordinates with 1 <= a <= 3, 1 <= b <= n and
// mapped to rows = n, cols = 3. Requires n > 4.
Constellation build_fig_constellation(std::int64_t n);
// Odd n only: the even construction for n-1 placed inside the n x 3 grid.
Constellation build_shifted_even_constellation(std::int64_t n);

// Exact T values keyed by (n, k); stores both orientations.
using TTable = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

// T(n,k) for every n, k >= 1 with n*k <= max_cells.
TTable compute_t_table(std::int64_t max_cells, const SolverOptions& options = {});

struct PropertyCheck {
  int property = 0;  // 1..6
  std::int64_t n = 0;
  std::int64_t k = 0;
  bool passed = true;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  std::int64_t failures() const;
  std::int64_t count(int property) const;
};

// Symmetry and monotonicity, T >= max(n,k), T(n,1) = n, subadditivity in
// both directions, T(n,2) = n for n > 3, and the n x 3 lower bounds backed by
// isosceles-free witnesses.
PropertyReport verify_tnk_properties(const TTable& table);

enum class ConjectureStatus { Confirmed, Refuted, OutOfRange };

struct ConjectureCheck {
  std::string conjecture;  // "upper_n_plus_k_minus_1", "even_upper", "t_n3"
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t_value = 0;
  std::int64_t claimed = 0;
  ConjectureStatus status = ConjectureStatus::OutOfRange;
};

std::string_view to_string(ConjectureStatus s);

struct ConjectureReport {
  std::vector<ConjectureCheck> checks;
  std::vector<ConjectureCheck> refutations() const;
};

// Evaluates T <= n+k-1; T(n,k) <= n+k-2 for even n and k >= 2n; and
// T(n,3) = n+1 (odd n > 4) / n+2 (even n > 4).
ConjectureReport conjecture_scan(const TTable& table);

// `.` for empty cells and `X` for chosen ones, one grid row per line.
std::string render_picture(const Constellation& c);

}  // namespace isogrid

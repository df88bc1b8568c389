#include "isogrid/constellation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <optional>
#include <sstream>

#include <omp.h>

#include "isogrid/errors.hpp"

namespace isogrid {

Constellation Constellation::make(const GridDims& dims, std::vector<GridPoint> points) {
  dims.validate();
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InvalidArgument("constellation contains a repeated point");
  }
  for (const auto& p : points) {
    if (!p.in_bounds(dims)) throw InvalidArgument("constellation point out of bounds");
  }
  return {dims, std::move(points)};
}

bool is_isosceles_free(const Constellation& c) {
  const auto& pts = c.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t l = j + 1; l < pts.size(); ++l)
        if (classify(pts[i], pts[j], pts[l]).isosceles) return false;
  return true;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Search-ready description of an R x C grid (row-major cell indices).
struct Problem {
  int rows = 0;
  int cols = 0;
  int cells = 0;
  std::vector<Mask> conflict;   // conflict[a*cells + b]: cells isosceles with a, b
  std::vector<Mask> row_mask;   // cells of each row
  std::vector<Mask> from_mask;  // cells with index >= i
  std::vector<int> reps;        // orbit representatives, increasing
  std::vector<std::int64_t> strip;  // strip[r]: upper bound on T(r, cols), r < rows

  Mask conflicts(int a, int b) const { return conflict[static_cast<std::size_t>(a * cells + b)]; }
};

GridPoint cell_point(int cell, int cols) { return {cell / cols, cell % cols}; }

Problem make_problem(int rows, int cols) {
  Problem pb;
  pb.rows = rows;
  pb.cols = cols;
  pb.cells = rows * cols;
  const int n = pb.cells;
  pb.conflict.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Mask m = 0;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (classify(cell_point(a, cols), cell_point(b, cols), cell_point(c, cols)).isosceles) {
          m |= bit(c);
        }
      }
      pb.conflict[static_cast<std::size_t>(a * n + b)] = m;
      pb.conflict[static_cast<std::size_t>(b * n + a)] = m;
    }
  }
  pb.row_mask.assign(static_cast<std::size_t>(rows), 0);
  for (int c = 0; c < n; ++c) pb.row_mask[static_cast<std::size_t>(c / cols)] |= bit(c);
  pb.from_mask.assign(static_cast<std::size_t>(n + 1), 0);
  for (int i = n - 1; i >= 0; --i) pb.from_mask[static_cast<std::size_t>(i)] = pb.from_mask[static_cast<std::size_t>(i + 1)] | bit(i);

  for (int c = 0; c < n; ++c) {
    const int r = c / cols, q = c % cols;
    std::vector<std::pair<int, int>> images{
        {r, q}, {rows - 1 - r, q}, {r, cols - 1 - q}, {rows - 1 - r, cols - 1 - q}};
    if (rows == cols) {
      const std::size_t base = images.size();
      for (std::size_t i = 0; i < base; ++i) images.emplace_back(images[i].second, images[i].first);
    }
    bool rep = true;
    for (const auto& [ir, iq] : images) rep = rep && c <= ir * cols + iq;
    if (rep) pb.reps.push_back(c);
  }
  return pb;
}

struct SharedState {
  std::atomic<std::int64_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t budget = 0;
};

// DFS over one subtree; records the first (lexicographically smallest) set of
// every new best size it reaches.
class SubtreeSearch {
 public:
  SubtreeSearch(const Problem& pb, SharedState& shared) : pb_(pb), shared_(shared) {}

  void run(int first_cell) {
    dfs(first_cell + 1, bit(first_cell), 0, 1);
    flush_nodes();
  }

  int best() const { return best_; }
  Mask best_mask() const { return best_mask_; }

 private:
  void flush_nodes() {
    if (pending_ == 0) return;
    const auto total = shared_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (total > shared_.budget) shared_.aborted.store(true);
  }

  std::int64_t bound(int idx, Mask inc, Mask avail) const {
    std::int64_t b = std::popcount(avail);
    const int row = idx / pb_.cols;
    const int rows_below = pb_.rows - row - 1;
    const Mask row_cells = pb_.row_mask[static_cast<std::size_t>(row)];
    b = std::min<std::int64_t>(
        b, std::popcount(avail & row_cells) + pb_.strip[static_cast<std::size_t>(rows_below)]);
    if (rows_below + 1 < pb_.rows) {
      b = std::min<std::int64_t>(
          b, pb_.strip[static_cast<std::size_t>(rows_below + 1)] - std::popcount(inc & row_cells));
    }
    return b;
  }

  void dfs(int idx, Mask inc, Mask forb, int count) {
    if (++pending_ >= 4096) {
      flush_nodes();
    }
    if (shared_.aborted.load(std::memory_order_relaxed)) return;
    if (count > best_) {
      best_ = count;
      best_mask_ = inc;
      std::int64_t seen = shared_.best.load();
      while (seen < count && !shared_.best.compare_exchange_weak(seen, count)) {
      }
    }
    if (idx >= pb_.cells) return;
    const Mask avail = ~forb & pb_.from_mask[static_cast<std::size_t>(idx)];
    if (avail == 0) return;
    const int next = std::countr_zero(avail);
    const std::int64_t need = std::max<std::int64_t>(shared_.best.load(), best_ + 1);
    if (count + bound(next, inc, avail) < need) return;

    Mask grown = forb;
    for (Mask rest = inc; rest; rest &= rest - 1) grown |= pb_.conflicts(next, std::countr_zero(rest));
    dfs(next + 1, inc | bit(next), grown, count + 1);
    dfs(next + 1, inc, forb, count);
  }

  const Problem& pb_;
  SharedState& shared_;
  int best_ = 0;
  Mask best_mask_ = 0;
  std::uint64_t pending_ = 0;
};

std::vector<GridPoint> mask_points(Mask m, int cols) {
  std::vector<GridPoint> pts;
  for (; m; m &= m - 1) pts.push_back(cell_point(std::countr_zero(m), cols));
  return pts;
}

std::vector<Constellation> seeds_for(std::int64_t rows, std::int64_t cols) {
  const GridDims dims{rows, cols};
  std::vector<Constellation> seeds;
  std::vector<GridPoint> line;
  if (rows >= cols) {
    for (std::int64_t r = 0; r < rows; ++r) line.push_back({r, 0});
  } else {
    for (std::int64_t c = 0; c < cols; ++c) line.push_back({0, c});
  }
  seeds.push_back(Constellation::make(dims, line));

  auto add_fig = [&](const Constellation& tall) {
    if (rows == tall.dims.rows && cols == 3) {
      seeds.push_back(tall);
    } else if (cols == tall.dims.rows && rows == 3) {
      std::vector<GridPoint> t;
      for (const auto& p : tall.points) t.push_back({p.col, p.row});
      seeds.push_back(Constellation::make(dims, t));
    }
  };
  const std::int64_t n = std::max(rows, cols);
  if (std::min(rows, cols) == 3 && n > 4) {
    add_fig(build_fig_constellation(n));
    if (n % 2 == 1 && n - 1 > 4) add_fig(build_shifted_even_constellation(n));
  }
  return seeds;
}

}  // namespace

std::int64_t ConstellationSolver::strip_value(std::int64_t rows, std::int64_t cols) {
  if (rows == 0 || cols == 0) return 0;
  const auto key = std::minmax(rows, cols);
  if (auto it = exact_cache_.find(key); it != exact_cache_.end()) return it->second;
  const ConstellationResult r = solve_oriented(rows, cols);
  // A budget-limited strip only yields the trivial bound.
  return r.exact ? r.t_value : rows * cols;
}

ConstellationResult ConstellationSolver::solve(const GridDims& dims) {
  dims.validate();
  const std::int64_t hard_cap = std::min<std::int64_t>(options_.cell_cap, 64);
  if (dims.point_count() > hard_cap) {
    throw ResourceRefused("exact constellation search refuses " +
                          std::to_string(dims.point_count()) + " cells (cap " +
                          std::to_string(hard_cap) + ")");
  }
  if (dims.rows >= dims.cols) return solve_oriented(dims.rows, dims.cols);

  ConstellationResult r = solve_oriented(dims.cols, dims.rows);
  std::vector<GridPoint> pts;
  for (const auto& p : r.witness.points) pts.push_back({p.col, p.row});
  r.witness = Constellation::make(dims, std::move(pts));
  return r;
}

ConstellationResult ConstellationSolver::solve_oriented(std::int64_t rows, std::int64_t cols) {
  const auto start = std::chrono::steady_clock::now();
  Problem pb = make_problem(static_cast<int>(rows), static_cast<int>(cols));
  pb.strip.assign(static_cast<std::size_t>(rows), 0);
  for (std::int64_t r = 1; r < rows; ++r) {
    pb.strip[static_cast<std::size_t>(r)] = strip_value(r, cols);
  }

  const GridDims dims{rows, cols};
  Constellation incumbent{dims, {}};
  SharedState shared;
  shared.budget = options_.node_budget;
  if (options_.use_seeds) {
    for (auto& s : seeds_for(rows, cols)) {
      if (s.size() > incumbent.size()) incumbent = std::move(s);
    }
    shared.best.store(static_cast<std::int64_t>(incumbent.size()));
  }

  const auto& reps = pb.reps;
  std::vector<int> found(reps.size(), 0);
  std::vector<Mask> masks(reps.size(), 0);
  const int workers = options_.threads > 0 ? options_.threads : omp_get_max_threads();
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::size_t i = 0; i < reps.size(); ++i) {
    SubtreeSearch search(pb, shared);
    search.run(reps[i]);
    found[i] = search.best();
    masks[i] = search.best_mask();
  }

  // Largest size wins; among equals, the smallest first cell.
  std::size_t winner = reps.size();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (winner == reps.size() || found[i] > found[winner]) winner = i;
  }

  ConstellationResult result;
  result.exact = !shared.aborted.load();
  if (winner != reps.size() &&
      static_cast<std::size_t>(found[winner]) >= std::max<std::size_t>(incumbent.size(), 1)) {
    result.witness = Constellation::make(dims, mask_points(masks[winner], pb.cols));
  } else {
    result.witness = incumbent;
  }
  result.t_value = static_cast<std::int64_t>(result.witness.size());
  result.s_value = result.t_value + 1;
  result.nodes_explored = shared.nodes.load();
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  if (result.exact) exact_cache_[std::minmax(rows, cols)] = result.t_value;
  return result;
}

ConstellationResult max_isosceles_free(const GridDims& dims, const SolverOptions& options) {
  ConstellationSolver solver(options);
  return solver.solve(dims);
}

std::int64_t brute_force_max_isosceles_free(const GridDims& dims) {
  dims.validate();
  if (dims.point_count() > 20) throw ResourceRefused("subset enumeration capped at 20 cells");
  const int n = static_cast<int>(dims.point_count());
  const int cols = static_cast<int>(dims.cols);
  std::vector<std::uint32_t> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (classify(cell_point(a, cols), cell_point(b, cols), cell_point(c, cols)).isosceles)
          triples.push_back((1u << a) | (1u << b) | (1u << c));

  std::int64_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    bool free = true;
    for (auto t : triples) {
      if ((subset & t) == t) {
        free = false;
        break;
      }
    }
    if (free) best = size;
  }
  return best;
}

namespace {

// (a, b) 1-based with a in [1, 3] and b in [1, n] -> row b-1, col a-1.
GridPoint from_ab(std::int64_t a, std::int64_t b) { return {b - 1, a - 1}; }

std::vector<GridPoint> even_construction_points(std::int64_t n) {
  std::vector<GridPoint> pts;
  for (std::int64_t i = 2; i <= n - 1; ++i) pts.push_back(from_ab(1, i));
  pts.push_back(from_ab(2, 1));
  pts.push_back(from_ab(3, 1));
  pts.push_back(from_ab(2, n));
  pts.push_back(from_ab(3, n));
  return pts;
}

}  // namespace

Constellation build_fig_constellation(std::int64_t n) {
  if (n <= 4) throw InvalidArgument("the n x 3 constructions need n > 4");
  const GridDims dims{n, 3};
  if (n % 2 == 0) return Constellation::make(dims, even_construction_points(n));
  std::vector<GridPoint> pts;
  for (std::int64_t i = 2; i <= n; ++i) pts.push_back(from_ab(1, i));
  pts.push_back(from_ab(2, 1));
  pts.push_back(from_ab(3, 1));
  return Constellation::make(dims, std::move(pts));
}

Constellation build_shifted_even_constellation(std::int64_t n) {
  if (n % 2 == 0 || n - 1 <= 4) {
    throw InvalidArgument("the shifted construction needs odd n with n - 1 > 4");
  }
  return Constellation::make(GridDims{n, 3}, even_construction_points(n - 1));
}

TTable compute_t_table(std::int64_t max_cells, const SolverOptions& options) {
  SolverOptions opts = options;
  opts.cell_cap = std::max(opts.cell_cap, max_cells);
  ConstellationSolver solver(opts);
  TTable table;
  for (std::int64_t n = 1; n * n <= max_cells; ++n) {
    for (std::int64_t k = n; n * k <= max_cells; ++k) {
      const ConstellationResult r = solver.solve({k, n});
      if (!r.exact) {
        throw ResourceRefused("node budget exhausted while computing T(" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
      }
      table[{n, k}] = r.t_value;
      table[{k, n}] = r.t_value;
    }
  }
  return table;
}

std::int64_t PropertyReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
}

std::int64_t PropertyReport::count(int property) const {
  return std::count_if(checks.begin(), checks.end(),
                       [&](const auto& c) { return c.property == property; });
}

PropertyReport verify_tnk_properties(const TTable& table) {
  PropertyReport report;
  auto lookup = [&](std::int64_t n, std::int64_t k) -> std::optional<std::int64_t> {
    auto it = table.find({n, k});
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
  auto add = [&](int prop, std::int64_t n, std::int64_t k, bool ok, std::string detail) {
    report.checks.push_back({prop, n, k, ok, std::move(detail)});
  };

  for (const auto& [key, t] : table) {
    const auto [n, k] = key;
    const std::string at = "T(" + std::to_string(n) + "," + std::to_string(k) + ")=" +
                           std::to_string(t);

    if (auto tr = lookup(k, n)) add(1, n, k, *tr == t, at + " vs T(k,n)=" + std::to_string(*tr));
    if (auto up = lookup(n + 1, k)) {
      add(1, n, k, t <= *up, at + " <= T(n+1,k)=" + std::to_string(*up));
    }

    add(2, n, k, t >= std::max(n, k), at + " >= max(n,k)");
    if (k == 1) add(3, n, k, t == n, at + " == n");

    // Splits along k; the transposed entries cover splits along n.
    for (std::int64_t left = 1; left < k; ++left) {
      auto a = lookup(n, left);
      auto b = lookup(n, k - left);
      if (a && b) {
        add(4, n, k, t <= *a + *b,
            at + " <= T(n," + std::to_string(left) + ")+T(n," + std::to_string(k - left) +
                ")=" + std::to_string(*a + *b));
      }
    }

    if (k == 2 && n > 3) add(5, n, k, t == n, at + " == n");

    if (k == 3 && n > 4) {
      const std::int64_t floor_value = n % 2 == 1 ? n + 1 : n + 2;
      const Constellation fig = build_fig_constellation(n);
      const bool witness_ok = is_isosceles_free(fig) &&
                              static_cast<std::int64_t>(fig.size()) == floor_value;
      add(6, n, k, witness_ok && t >= floor_value,
          at + " >= " + std::to_string(floor_value) +
              (witness_ok ? " (witness ok)" : " (witness FAILED)"));
    }
  }
  return report;
}

std::string_view to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Confirmed:
      return "confirmed";
    case ConjectureStatus::Refuted:
      return "REFUTED";
    case ConjectureStatus::OutOfRange:
      return "out-of-range";
  }
  return "?";
}

std::vector<ConjectureCheck> ConjectureReport::refutations() const {
  std::vector<ConjectureCheck> out;
  for (const auto& c : checks)
    if (c.status == ConjectureStatus::Refuted) out.push_back(c);
  return out;
}

ConjectureReport conjecture_scan(const TTable& table) {
  ConjectureReport report;
  auto verdict = [](bool in_range, bool holds) {
    if (!in_range) return ConjectureStatus::OutOfRange;
    return holds ? ConjectureStatus::Confirmed : ConjectureStatus::Refuted;
  };
  for (const auto& [key, t] : table) {
    const auto [n, k] = key;
    report.checks.push_back({"upper_n_plus_k_minus_1", n, k, t, n + k - 1,
                             verdict(true, t <= n + k - 1)});
    const bool even_range = n % 2 == 0 && k >= 2 * n;
    report.checks.push_back({"even_upper", n, k, t, n + k - 2,
                             verdict(even_range, t <= n + k - 2)});
    const bool n3_range = k == 3 && n > 4;
    const std::int64_t claimed = n % 2 == 1 ? n + 1 : n + 2;
    report.checks.push_back({"t_n3", n, k, t, claimed, verdict(n3_range, t == claimed)});
  }
  return report;
}

std::string render_picture(const Constellation& c) {
  std::vector<std::string> lines(static_cast<std::size_t>(c.dims.rows),
                                 std::string(static_cast<std::size_t>(c.dims.cols), '.'));
  for (const auto& p : c.points) {
    lines[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)] = 'X';
  }
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

}  // namespace isogrid

#include "isogrid/sequences.hpp"

#include <algorithm>

#include <omp.h>

#include "isogrid/errors.hpp"

namespace isogrid {

namespace {

const CensusCounts kEmptyGrid{};

std::int64_t sq(std::int64_t n) { return (n - 1) * (n - 1); }
std::int64_t half_sq(std::int64_t n) { return sq(n) / 2; }
std::int64_t odd_pairs(std::int64_t n, std::int64_t k) {
  return k % 2 == 1 ? n * (n - 1) : 0;
}

bool is_odd(std::int64_t n) { return n % 2 == 1; }
bool is_even(std::int64_t n) { return n % 2 == 0; }

const std::vector<std::int64_t> kFourTerm{2, 0, -2, 1};
const std::vector<std::int64_t> kTwoTerm{2, -1};
const std::vector<std::int64_t> kThreeTerm{3, -3, 1};

std::int64_t zero(std::int64_t, std::int64_t) { return 0; }
std::int64_t total_inhom(std::int64_t n, std::int64_t k) {
  return half_sq(n) + odd_pairs(n, k);
}
std::int64_t acute_inhom(std::int64_t n, std::int64_t) { return half_sq(n); }

RecurrenceClause above(ShapeClass cls, const std::vector<std::int64_t>& coeffs,
                       std::int64_t (*inhom)(std::int64_t, std::int64_t),
                       std::function<std::int64_t(std::int64_t)> bound) {
  return {cls, coeffs, inhom, 0, RecurrenceClause::Range::Above, std::move(bound)};
}

RecurrenceClause exactly(ShapeClass cls, const std::vector<std::int64_t>& coeffs,
                         std::int64_t (*inhom)(std::int64_t, std::int64_t),
                         std::int64_t defect,
                         std::function<std::int64_t(std::int64_t)> at) {
  return {cls, coeffs, inhom, defect, RecurrenceClause::Range::Exactly, std::move(at)};
}

std::vector<RecurrenceTheorem> make_registry() {
  using SC = ShapeClass;
  auto any = [](std::int64_t n) { return n >= 2; };
  auto odd = [](std::int64_t n) { return n >= 2 && is_odd(n); };
  auto even = [](std::int64_t n) { return n >= 2 && is_even(n); };

  std::vector<RecurrenceTheorem> reg;
  reg.push_back({"main", "a(k) = 2a(k-1) - 2a(k-3) + a(k-4) for k > (n-1)^2+3", any,
                 {above(SC::Iso, kFourTerm, zero, [](auto n) { return sq(n) + 3; })}});
  reg.push_back({"main2",
                 "a(k) = 2a(k-1) - a(k-2) + [k odd] n(n-1) + floor((n-1)^2/2) for k > (n-1)^2+1",
                 any, {above(SC::Iso, kTwoTerm, total_inhom, [](auto n) { return sq(n) + 1; })}});
  reg.push_back({"main2_acute",
                 "acute: a(k) = 2a(k-1) - a(k-2) + floor((n-1)^2/2) for k > (n-1)^2+1", any,
                 {above(SC::Acute, kTwoTerm, acute_inhom, [](auto n) { return sq(n) + 1; })}});
  reg.push_back({"main2_obtuse",
                 "obtuse: a(k) = 2a(k-1) - a(k-2) + [k odd] n(n-1) for k > max(3,(n-1)^2+1)",
                 any, {above(SC::Obtuse, kTwoTerm, odd_pairs,
                             [](auto n) { return std::max<std::int64_t>(3, sq(n) + 1); })}});
  reg.push_back({"main2_right", "right: a(k) = 2a(k-1) - a(k-2) for k > max(3,(n-1)^2+1)", any,
                 {above(SC::Right, kTwoTerm, zero,
                        [](auto n) { return std::max<std::int64_t>(3, sq(n) + 1); })}});
  reg.push_back({"main_even", "n odd: a(k) = 2a(k-1) - 2a(k-3) + a(k-4) for k > (n-1)^2+2",
                 odd, {above(SC::Iso, kFourTerm, zero, [](auto n) { return sq(n) + 2; })}});
  reg.push_back({"main2_even",
                 "n odd: a(k) = 2a(k-1) - a(k-2) + [k odd] n(n-1) + floor((n-1)^2/2) for k > (n-1)^2",
                 odd, {above(SC::Iso, kTwoTerm, total_inhom, [](auto n) { return sq(n); })}});
  reg.push_back(
      {"main_even_aor",
       "n odd: four-term recurrence for acute (k > (n-1)^2+2), obtuse and right (k > max(7,(n-1)^2+2))",
       odd,
       {above(SC::Acute, kFourTerm, zero, [](auto n) { return sq(n) + 2; }),
        above(SC::Obtuse, kFourTerm, zero,
              [](auto n) { return std::max<std::int64_t>(7, sq(n) + 2); }),
        above(SC::Right, kFourTerm, zero,
              [](auto n) { return std::max<std::int64_t>(7, sq(n) + 2); })}});
  reg.push_back({"main2_even_obtuse",
                 "n odd: obtuse a(k) = 2a(k-1) - a(k-2) + [k odd] n(n-1) for k > max(5,(n-1)^2)",
                 odd, {above(SC::Obtuse, kTwoTerm, odd_pairs,
                             [](auto n) { return std::max<std::int64_t>(5, sq(n)); })}});
  reg.push_back({"main2_even_acute",
                 "acute: a(k) = 2a(k-1) - a(k-2) + floor((n-1)^2/2) for k > (n-1)^2", any,
                 {above(SC::Acute, kTwoTerm, acute_inhom, [](auto n) { return sq(n); })}});
  reg.push_back({"cor_acute_homog",
                 "acute: a(k) = 3a(k-1) - 3a(k-2) + a(k-3) for k > (n-1)^2+1", any,
                 {above(SC::Acute, kThreeTerm, zero, [](auto n) { return sq(n) + 1; })}});
  reg.push_back({"main2_even_right", "n > 2: right a(k) = 2a(k-1) - a(k-2) for k > max(5,(n-1)^2)",
                 [](std::int64_t n) { return n > 2; },
                 {above(SC::Right, kTwoTerm, zero,
                        [](auto n) { return std::max<std::int64_t>(5, sq(n)); })}});
  reg.push_back({"main3",
                 "n even, k = (n-1)^2+1: a(k) = 2a(k-1) - a(k-2) + floor((n-1)^2/2) + 4", even,
                 {exactly(SC::Iso, kTwoTerm, total_inhom, 4, [](auto n) { return sq(n) + 1; })}});
  reg.push_back({"main3_obtuse", "n > 2 even, k = (n-1)^2+1: obtuse a(k) = 2a(k-1) - a(k-2) + 4",
                 [](std::int64_t n) { return n > 2 && is_even(n); },
                 {exactly(SC::Obtuse, kTwoTerm, odd_pairs, 4, [](auto n) { return sq(n) + 1; })}});
  reg.push_back({"main4",
                 "n odd, k = (n-1)^2: a(k) = 2a(k-1) - a(k-2) + floor((n-1)^2/2) + 4", odd,
                 {exactly(SC::Iso, kTwoTerm, total_inhom, 4, [](auto n) { return sq(n); })}});
  reg.push_back({"main4_obtuse", "n > 3 odd, k = (n-1)^2: obtuse a(k) = 2a(k-1) - a(k-2) + 4",
                 [](std::int64_t n) { return n > 3 && is_odd(n); },
                 {exactly(SC::Obtuse, kTwoTerm, odd_pairs, 4, [](auto n) { return sq(n); })}});
  reg.push_back({"defect_sec5",
                 "a(k) = 2a(k-1) - 2a(k-3) + a(k-4) - 4 at k = (n-1)^2+3 (n even), (n-1)^2+2 (n odd)",
                 any, {exactly(SC::Iso, kFourTerm, zero, -4, [](auto n) { return expected_K(n); })}});
  return reg;
}

}  // namespace

const CensusCounts& SequenceTable::at(std::int64_t k) const {
  if (k == 0 && k_first == 1) return kEmptyGrid;
  if (!contains(k)) {
    throw InvalidArgument("k=" + std::to_string(k) + " is outside the table for n=" +
                          std::to_string(n));
  }
  return rows[static_cast<std::size_t>(k - k_first)];
}

std::vector<std::int64_t> SequenceTable::column(ShapeClass cls) const {
  std::vector<std::int64_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.get(cls));
  return out;
}

SequenceTable build_table(std::int64_t n, std::int64_t k_max, int threads) {
  if (n < 1 || k_max < 1) throw InvalidArgument("build_table needs n, k_max >= 1");
  // Validates the largest grid up front so no worker throws.
  GridDims{n, k_max}.validate();

  SequenceTable table{n, 1, std::vector<CensusCounts>(static_cast<std::size_t>(k_max))};
  const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t k = k_max; k >= 1; --k) {
    const GridDims dims = n <= k ? GridDims{n, k} : GridDims{k, n};
    table.rows[static_cast<std::size_t>(k - 1)] = apex_census_serial(dims);
  }
  return table;
}

const std::vector<RecurrenceTheorem>& theorem_registry() {
  static const std::vector<RecurrenceTheorem> registry = make_registry();
  return registry;
}

const RecurrenceTheorem& find_theorem(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  throw InvalidArgument("unknown theorem id '" + id + "'");
}

std::int64_t clause_residual(const SequenceTable& table, const RecurrenceClause& clause,
                             std::int64_t k) {
  std::int64_t predicted = clause.inhomogeneous(table.n, k);
  for (std::size_t i = 0; i < clause.coeffs.size(); ++i) {
    const std::int64_t prev = table.at(k - 1 - static_cast<std::int64_t>(i)).get(clause.cls);
    predicted = checked_add(predicted, checked_mul(clause.coeffs[i], prev));
  }
  return checked_sub(table.at(k).get(clause.cls), predicted);
}

RecurrenceReport check_recurrence(const SequenceTable& table, const std::string& theorem_id) {
  const RecurrenceTheorem& theorem = find_theorem(theorem_id);
  RecurrenceReport report;
  report.theorem_id = theorem.id;
  report.n = table.n;
  report.applicable = theorem.applies_to(table.n);
  if (!report.applicable) return report;

  // Lookback may reach k = 0 (the empty grid) when the table starts at 1.
  const std::int64_t lowest = table.k_first == 1 ? 0 : table.k_first;
  auto has_lookback = [&](const RecurrenceClause& c, std::int64_t k) {
    return k - static_cast<std::int64_t>(c.lookback()) >= lowest;
  };
  auto note_check = [&](std::int64_t k) {
    if (report.checks == 0 || k < report.k_min_checked) report.k_min_checked = k;
    if (report.checks == 0 || k > report.k_max_checked) report.k_max_checked = k;
    ++report.checks;
  };

  for (const auto& clause : theorem.clauses) {
    const std::int64_t bound = clause.bound(table.n);
    const std::int64_t first = clause.range == RecurrenceClause::Range::Above ? bound + 1 : bound;
    const std::int64_t last =
        clause.range == RecurrenceClause::Range::Above ? table.k_last() : bound;
    if (table.k_last() < first || !has_lookback(clause, first)) {
      throw InvalidArgument("table for n=" + std::to_string(table.n) + " covers k in [" +
                            std::to_string(table.k_first) + ", " +
                            std::to_string(table.k_last()) + "] but " + theorem.id +
                            " needs k=" + std::to_string(first) + " with lookback " +
                            std::to_string(clause.lookback()));
    }
    for (std::int64_t k = first; k <= last; ++k) {
      const std::int64_t residual = clause_residual(table, clause, k);
      note_check(k);
      if (residual != clause.defect) {
        const std::int64_t actual = table.at(k).get(clause.cls);
        report.violations.push_back({k, clause.cls, actual - residual + clause.defect, actual});
      }
      if (clause.range == RecurrenceClause::Range::Exactly && residual != 0) {
        report.boundary_defects.push_back({k, clause.cls, residual});
      }
    }
    if (clause.range == RecurrenceClause::Range::Above) {
      for (std::int64_t k = std::max(table.k_first, lowest); k < first; ++k) {
        if (!has_lookback(clause, k)) continue;
        const std::int64_t residual = clause_residual(table, clause, k);
        if (residual != 0) report.boundary_defects.push_back({k, clause.cls, residual});
      }
    }
  }
  return report;
}

std::int64_t four_term_residual(const SequenceTable& table, std::int64_t k) {
  static const RecurrenceClause clause{ShapeClass::Iso, kFourTerm, zero, 0,
                                       RecurrenceClause::Range::Above,
                                       [](std::int64_t) { return 0; }};
  return clause_residual(table, clause, k);
}

std::int64_t expected_K(std::int64_t n) { return is_even(n) ? sq(n) + 3 : sq(n) + 2; }

std::int64_t optimal_K(const SequenceTable& table) {
  const std::int64_t need = sq(table.n) + 8;
  if (table.k_last() < need) {
    throw InvalidArgument("optimal_K needs the table for n=" + std::to_string(table.n) +
                          " to reach k=" + std::to_string(need));
  }
  const std::int64_t lowest = table.k_first == 1 ? 0 : table.k_first;
  const std::int64_t first_checkable = lowest + 4;
  std::int64_t K = first_checkable - 1;
  for (std::int64_t k = first_checkable; k <= table.k_last(); ++k) {
    if (four_term_residual(table, k) != 0) K = k;
  }
  return K;
}

}  // namespace isogrid

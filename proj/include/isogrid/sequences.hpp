#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isogrid/census.hpp"

namespace isogrid {

// a_n(k) for a contiguous range of k, all four classes.
struct SequenceTable {
  std::int64_t n = 1;
  std::int64_t k_first = 1;
  std::vector<CensusCounts> rows;

  std::int64_t k_last() const { return k_first + static_cast<std::int64_t>(rows.size()) - 1; }
  bool contains(std::int64_t k) const { return k >= k_first && k <= k_last(); }
  // Counts at column count k. k == 0 is the empty grid (all zero) and is
  // available whenever the table starts at k = 1.
  const CensusCounts& at(std::int64_t k) const;
  std::vector<std::int64_t> column(ShapeClass cls) const;
};

// Rows for k = 1..k_max; rows are computed in parallel across k.
SequenceTable build_table(std::int64_t n, std::int64_t k_max, int threads = 0);

// One equation of a recurrence claim:
//   a(k) = sum_i coeffs[i] * a(k-1-i) + inhomogeneous(n, k) + defect
// on the class column `cls`, for every k in the claim's range.
struct RecurrenceClause {
  enum class Range { Above, Exactly };

  ShapeClass cls = ShapeClass::Iso;
  std::vector<std::int64_t> coeffs;
  std::function<std::int64_t(std::int64_t n, std::int64_t k)> inhomogeneous;
  std::int64_t defect = 0;
  Range range = Range::Above;
  // Range::Above: the claim holds for k > bound(n); Range::Exactly: k == bound(n).
  std::function<std::int64_t(std::int64_t n)> bound;

  std::size_t lookback() const { return coeffs.size(); }
};

struct RecurrenceTheorem {
  std::string id;
  std::string statement;
  std::function<bool(std::int64_t n)> applies_to;
  std::vector<RecurrenceClause> clauses;
};

const std::vector<RecurrenceTheorem>& theorem_registry();
// Throws InvalidArgument for unknown ids.
const RecurrenceTheorem& find_theorem(const std::string& id);

struct RecurrenceViolation {
  std::int64_t k = 0;
  ShapeClass cls = ShapeClass::Iso;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

// Residual of a clause's equation without its stated defect, at a k where the
// clause is not claimed to hold with zero defect (or at the single k of an
// Exactly clause).
struct BoundaryDefect {
  std::int64_t k = 0;
  ShapeClass cls = ShapeClass::Iso;
  std::int64_t defect = 0;
};

struct RecurrenceReport {
  std::string theorem_id;
  std::int64_t n = 0;
  bool applicable = false;
  std::int64_t checks = 0;  // number of (clause, k) equations evaluated
  std::int64_t k_min_checked = 0;
  std::int64_t k_max_checked = 0;
  std::vector<RecurrenceViolation> violations;
  std::vector<BoundaryDefect> boundary_defects;

  bool ok() const { return violations.empty(); }
};

// Residual a(k) - sum coeffs * a(k-1-i) - inhomogeneous(n, k), excluding the
// clause defect. Requires k - lookback >= 0 and the lookback inside the table.
std::int64_t clause_residual(const SequenceTable& table,
                             const RecurrenceClause& clause, std::int64_t k);

// Throws InvalidArgument for unknown ids or tables that do not reach the
// claimed range.
RecurrenceReport check_recurrence(const SequenceTable& table,
                                  const std::string& theorem_id);

// Residual of a(k) = 2a(k-1) - 2a(k-3) + a(k-4) on the total column.
std::int64_t four_term_residual(const SequenceTable& table, std::int64_t k);

// (n-1)^2 + 3 for even n, (n-1)^2 + 2 for odd n.
std::int64_t expected_K(std::int64_t n);

// Smallest K such that the four-term recurrence holds for every table k > K.
// Requires the table to reach (n-1)^2 + 8.
std::int64_t optimal_K(const SequenceTable& table);

}  // namespace isogrid

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isogrid/geometry.hpp"

namespace isogrid {

// Counts from splitting an n x k grid into its first column, the n x (k-2)
// middle block and its last column.
struct ColumnDecomposition {
  std::int64_t b = 0;        // isosceles triangles touching the last column
  std::int64_t c = 0;        // ... touching both the first and the last column
  std::int64_t a_count = 0;  // c-triangles with all vertices in the outer columns
  std::int64_t b_count = 0;  // c-triangles with one vertex in each part

  friend bool operator==(const ColumnDecomposition&, const ColumnDecomposition&) = default;
};

// Requires cols >= 3.
ColumnDecomposition decompose(const GridDims& dims);

// floor((n-1)^2 / 2): isosceles triangles with all three vertices in the two
// outer columns once k is large.
std::int64_t outer_column_count(std::int64_t n);

// Closed form of c for k > (n-1)^2 + 1; throws OutOfRegime otherwise.
std::int64_t c_closed_form(std::int64_t n, std::int64_t k);

// 2 * sum_{m=1}^{floor((n-1)/2)} (n - 2m) == floor((n-1)^2 / 2), summed literally.
bool lemma3_check(std::int64_t n);

struct IdentityCheckConfig {
  std::int64_t n_max = 10;
  std::int64_t y_max = 200;
};

// A tuple satisfying a lemma's hypotheses but not its conclusion.
struct LemmaViolation {
  int lemma = 0;  // 1 or 2
  std::int64_t n = 0, x = 0, y = 0, u = 0, w = 0;
};

// Exhausts x^2 + y^2 = u^2 + w^2 under both uniqueness lemmas:
//   lemma 1: 0 < x, u <= n and 2y > n^2
//   lemma 2: 0 <= x, u <= n and 2y > n^2 + 1
// with y <= y_max and w >= 0; the conclusion is x == u and y == w.
std::vector<LemmaViolation> lemma12_exhaust(const IdentityCheckConfig& cfg);

std::string to_string(const LemmaViolation& v);

}  // namespace isogrid

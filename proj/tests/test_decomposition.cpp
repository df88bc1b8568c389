#include <doctest.h>

#include "isogrid/census.hpp"
#include "isogrid/decomposition.hpp"
#include "isogrid/errors.hpp"

using namespace isogrid;

TEST_CASE("decompose examples") {
  CHECK(decompose({2, 3}).b == 6);
  const ColumnDecomposition odd = decompose({3, 9});
  CHECK(odd.c == 8);
  CHECK(odd.c == odd.a_count + odd.b_count);
  CHECK(decompose({3, 8}).c == 2);
  CHECK_THROWS_AS(decompose({4, 2}), InvalidArgument);
}

TEST_CASE("c_closed_form examples and regime") {
  CHECK(c_closed_form(3, 9) == 8);
  CHECK(c_closed_form(2, 5) == 2);
  CHECK(c_closed_form(4, 12) == 4);
  CHECK_THROWS_AS(c_closed_form(3, 5), OutOfRegime);
  CHECK_THROWS_AS(c_closed_form(4, 10), OutOfRegime);
}

TEST_CASE("b equals the first difference of a_n(k)") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    for (std::int64_t k = 3; k <= 12; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const ColumnDecomposition d = decompose({n, k});
      CHECK(d.b == census_row(n, k).total_iso - census_row(n, k - 1).total_iso);
      CHECK(d.c == d.a_count + d.b_count);
    }
  }
}

TEST_CASE("c matches the closed form past (n-1)^2 + 1") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    const std::int64_t start = (n - 1) * (n - 1) + 2;
    for (std::int64_t k = std::max<std::int64_t>(3, start); k <= (n - 1) * (n - 1) + 9; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const ColumnDecomposition d = decompose({n, k});
      CHECK(d.c == c_closed_form(n, k));
      CHECK(d.a_count == outer_column_count(n));
    }
  }
}

TEST_CASE("four surplus triangles at the boundary column count") {
  for (std::int64_t n : {2, 4, 6}) {
    const std::int64_t k = (n - 1) * (n - 1) + 1;
    if (k < 3) continue;
    CAPTURE(n);
    CHECK(decompose({n, k}).c == outer_column_count(n) + 4);
  }
  for (std::int64_t n : {3, 5}) {
    const std::int64_t k = (n - 1) * (n - 1);
    CAPTURE(n);
    CHECK(decompose({n, k}).c == outer_column_count(n) + 4);
  }
}

TEST_CASE("lemma3_check") {
  CHECK(lemma3_check(5));
  CHECK(lemma3_check(2));
  CHECK(lemma3_check(6));
  for (std::int64_t n = 1; n <= 10'000; ++n) REQUIRE(lemma3_check(n));
  CHECK_THROWS_AS(lemma3_check(0), InvalidArgument);
}

TEST_CASE("lemma12_exhaust finds no counterexamples") {
  CHECK(lemma12_exhaust({10, 200}).empty());
  CHECK(lemma12_exhaust({1, 1}).empty());
  CHECK_THROWS_AS(lemma12_exhaust({0, 5}), InvalidArgument);
}

TEST_CASE("the y bound in the second lemma is needed") {
  // 0 + 5^2 = 3^2 + 4^2 with n = 3, y = 5 <= (n^2+1)/2: outside the hypothesis.
  CHECK(0 * 0 + 5 * 5 == 3 * 3 + 4 * 4);
  CHECK_FALSE(2 * 5 > 3 * 3 + 1);
  CHECK(lemma12_exhaust({3, 50}).empty());
}

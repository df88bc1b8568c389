#include <doctest.h>

#include <map>
#include <vector>

#include "isogrid/errors.hpp"
#include "isogrid/genfunc.hpp"

using namespace isogrid;

namespace {

IntPolynomial x_minus_1() { return {-1, 1}; }
IntPolynomial x_plus_1() { return {1, 1}; }

// Coefficients in descending powers, as the factored forms are printed.
IntPolynomial descending(std::vector<std::int64_t> c) {
  std::vector<BigInt> asc(c.rbegin(), c.rend());
  return IntPolynomial(std::move(asc));
}

IntPolynomial factored(std::int64_t scale, std::size_t x_power, unsigned minus_one,
                       unsigned plus_one, std::vector<std::int64_t> inner) {
  IntPolynomial p = IntPolynomial::monomial(scale, x_power);
  p = poly_mul(p, poly_pow(x_minus_1(), minus_one));
  p = poly_mul(p, poly_pow(x_plus_1(), plus_one));
  return poly_mul(p, descending(std::move(inner)));
}

// Second, independent entry of the reference numerators as scale * x^j *
// (x-1)^a * (x+1)^b * inner, used to cross-check the expanded fixture file.
std::map<std::pair<std::int64_t, ShapeClass>, IntPolynomial> factored_numerators() {
  using SC = ShapeClass;
  std::map<std::pair<std::int64_t, ShapeClass>, IntPolynomial> m;
  m[{2, SC::Iso}] = factored(2, 1, 0, 0, {2, -1, -2});
  m[{3, SC::Iso}] = factored(2, 1, 0, 0, {2, 4, 2, -8, -5});
  m[{4, SC::Iso}] = factored(4, 1, 0, 0, {1, 0, -1, 0, 2, 1, 4, 4, -3, -9, -4});
  m[{5, SC::Iso}] =
      factored(4, 1, 0, 0, {1, 0, -1, 0, 0, 0, 2, 2, -1, -1, 5, 6, 6, 1, -8, -15, -6});
  m[{6, SC::Iso}] = factored(2, 1, 0, 0, {2, 0, -2, 0, 2, 0, -2, 0, 0, 0, 6, 0, -4, 2,
                                          0, -2, 6, 12, 0, -6, 26, 24, 6, -8, -30, -43, -16});
  m[{7, SC::Iso}] = factored(
      2, 1, 0, 0, {2, 0, -2, 0, 0, 0, 0, 0, 2, 0, 2, 0, -4, 0, 4, 0, -4, 4, 0, -2, 10, 0, -6,
                   4, 2, -2, 10, 18, 2, 4, 40, 22, -2, -20, -44, -58, -21});
  m[{8, SC::Iso}] = factored(
      4, 1, 0, 0,
      {1, 0, -1, 0, 1,  0, -1, 0,  0, 0,  0, 0, 0, 0, 3,  0,  -2, 0,  -1, 0,  0,  0,  2,  0,  2,  1,
       -3, -1, 3, 1, -4, 4, 1, -3, 7, 0, -3, 5, 3, -2, 6, 13, 10, 7, 19, 9, -7, -17, -29, -37, -13});

  m[{2, SC::Obtuse}] = factored(-2, 4, 0, 0, {1});
  m[{3, SC::Obtuse}] = factored(-2, 4, 0, 0, {1, 0, 2});
  m[{4, SC::Obtuse}] = factored(2, 3, 0, 0, {2, 0, -2, -1, 0, -2, 2, -3, -2});
  m[{5, SC::Obtuse}] =
      factored(2, 1, 0, 0, {2, 0, -2, 0, 0, 0, 4, 1, -4, -4, 0, -1, 4, -6, -3, 0, -1});
  m[{6, SC::Obtuse}] = factored(2, 1, 0, 0, {2, 0, -2, 0, 2, 0, -2, 0, 0, 0, 6, 0, -6, 2,
                                             0, -3, 6, 2, -6, -7, 4, 0, 2, -9, -4, 0, -2});
  m[{7, SC::Obtuse}] = factored(
      2, 1, 0, 0, {2, 0, -2, 0, 0, 0, 0, 0, 2, 0, 2, 0, -4, 0, 4, 0, -4, 2, 0, 0, 10, -2, -10,
                   5, 0, -8, 8, 3, -8, -6, 8, -3, 0, -11, -4, -1, -4});
  m[{8, SC::Obtuse}] = factored(
      2, 1, 0, 0,
      {2,  0,  -2, 0, 2,  0,  -2, 0,  0,   0,  0, 0,  0,  0,  6,  0,  -4, 0,  -2, 0,  0,  0,  4,  0,  2,  2,
       -6, -2, 8,  2, -8, 2,  0,  0,  16, -5, -16, 10, 0, -15, 10, 4, -4, -5, 6, -6, -2, -13, -4, -2, -6});

  m[{2, SC::Acute}] = IntPolynomial{};
  m[{3, SC::Acute}] = factored(2, 2, 0, 1, {3, -4});
  m[{4, SC::Acute}] = factored(2, 2, 0, 1, {2, -1, 3, 3, -9});
  m[{5, SC::Acute}] = factored(2, 2, 0, 1, {2, -2, 1, 5, 3, -1, 3, -15});
  m[{6, SC::Acute}] = factored(2, 2, 0, 1, {2, -2, 2, -2, 0, 7, -5, 1, 15, 2, -6, 2, -22});
  m[{7, SC::Acute}] = factored(
      2, 2, 0, 1, {2, -2, 0, 0, 2, 2, -4, 4, -1, -1, 11, -7, 10, 14, 2, -13, 2, -30});
  m[{8, SC::Acute}] = factored(2, 2, 0, 1, {2, -2, 2, -2, 0, 0, 0, 6, -4, -2, 0, 4, 4,
                                            -7, 9, -3, -1, 16, 0, 10, 12, 1, -21, 3, -39});

  m[{2, SC::Right}] = factored(2, 1, 1, 1, {1, 2});
  m[{3, SC::Right}] = factored(2, 1, 1, 1, {1, 2, 4, 5});
  m[{4, SC::Right}] = factored(2, 1, 1, 1, {1, 2, 4, 6, 9, 8});
  m[{5, SC::Right}] = factored(2, 1, 1, 1, {1, 2, 4, 6, 9, 12, 15, 11});
  m[{6, SC::Right}] = factored(2, 1, 1, 1, {1, 2, 4, 6, 9, 12, 16, 20, 21, 14});
  m[{7, SC::Right}] = factored(2, 1, 1, 1, {1, 2, 4, 6, 9, 12, 16, 20, 25, 29, 27, 17});
  m[{8, SC::Right}] =
      factored(2, 1, 1, 1, {1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 38, 33, 20});
  return m;
}

}  // namespace

TEST_CASE("poly_mul examples") {
  CHECK(poly_mul(x_minus_1(), x_plus_1()) == IntPolynomial{-1, 0, 1});
  CHECK(poly_mul(poly_pow(x_minus_1(), 3), x_plus_1()) == census_denominator());
  CHECK(census_denominator() == IntPolynomial{-1, 2, 0, -2, 1});
  CHECK(poly_mul(IntPolynomial{3, 1, 4}, IntPolynomial{}).is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
}

TEST_CASE("poly_mul does not overflow") {
  const BigInt big = BigInt(1) << 70;
  const IntPolynomial p(std::vector<BigInt>{big, big});
  CHECK(poly_mul(p, p)[1] == 2 * big * big);
}

TEST_CASE("poly_divmod") {
  const IntPolynomial d = census_denominator();
  auto [q, r] = poly_divmod(d, x_plus_1());
  CHECK(q == poly_pow(x_minus_1(), 3));
  CHECK(r.is_zero());
  auto [q2, r2] = poly_divmod(IntPolynomial{1, 0, 1}, x_minus_1());
  CHECK(q2 == IntPolynomial{1, 1});
  CHECK(r2 == IntPolynomial{2});
  CHECK_THROWS_AS(poly_divmod(d, IntPolynomial{}), InvalidArgument);
  CHECK_THROWS_AS(poly_divmod(IntPolynomial{0, 1}, IntPolynomial{1, 2}), InvalidArgument);
}

TEST_CASE("numerator_from_sequence examples for n = 2") {
  const SequenceTable t = build_table(2, numerator_degree_bound(2) + 9);
  CHECK(numerator_from_sequence(t, ShapeClass::Iso) == IntPolynomial{0, -4, -2, 4});
  CHECK(numerator_from_sequence(t, ShapeClass::Obtuse) == IntPolynomial{0, 0, 0, 0, -2});
  CHECK(numerator_from_sequence(t, ShapeClass::Acute).is_zero());
}

TEST_CASE("the x^(k-1) offset reproduces the reference n = 3 numerator") {
  const SequenceTable t = build_table(3, numerator_degree_bound(3) + 9);
  CHECK(numerator_from_sequence(t, ShapeClass::Iso) == factored_numerators().at({3, ShapeClass::Iso}));
}

TEST_CASE("numerator_from_sequence rejects short tables and non-recurrent data") {
  CHECK_THROWS_AS(numerator_from_sequence(build_table(2, 10), ShapeClass::Iso), InvalidArgument);
  SequenceTable t = build_table(2, 20);
  t.rows[15].total_iso += 1;
  try {
    numerator_from_sequence(t, ShapeClass::Iso, 4);
    FAIL("expected RecurrenceTailError");
  } catch (const RecurrenceTailError& e) {
    CHECK(e.index() == 15);
  }
}

TEST_CASE("expand_gf examples") {
  GenFunction iso{IntPolynomial{0, -4, -2, 4}};
  auto s = expand_gf(iso, 5);
  CHECK(s == std::vector<BigInt>{0, 4, 10, 16, 24});
  CHECK(expand_gf(GenFunction{IntPolynomial{}}, 4) == std::vector<BigInt>(4, 0));
  CHECK(expand_gf(GenFunction{IntPolynomial{0, 0, 0, 0, -2}}, 5) ==
        std::vector<BigInt>{0, 0, 0, 0, 2});
}

TEST_CASE("fixture file matches the independently entered factored forms") {
  const auto fixtures = load_fixtures(ISOGRID_FIXTURE_PATH);
  const auto factored_forms = factored_numerators();
  CHECK(fixtures.size() == factored_forms.size());
  for (const auto& fx : fixtures) {
    CAPTURE(fx.n);
    CAPTURE(to_string(fx.cls));
    CHECK(fx.numerator == factored_forms.at({fx.n, fx.cls}));
  }
  CHECK(builtin_fixtures().size() == fixtures.size());
}

TEST_CASE("parse_fixtures") {
  const auto fx = parse_fixtures("# comment\n\n3 right 0 -2 1  # trailing\n2 iso\n");
  REQUIRE(fx.size() == 2);
  CHECK(fx[0].cls == ShapeClass::Right);
  CHECK(fx[0].numerator == IntPolynomial{0, -2, 1});
  CHECK(fx[1].numerator.is_zero());
  CHECK_THROWS_AS(parse_fixtures("2 sharp 1 2"), InvalidArgument);
  CHECK_THROWS_AS(parse_fixtures("2 iso 1 x"), InvalidArgument);
}

TEST_CASE("round trip, reduced denominators and degree bound for n in [2, 8]") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    const std::int64_t bound = numerator_degree_bound(n);
    const SequenceTable t = build_table(n, bound + 9);
    for (ShapeClass cls : {ShapeClass::Iso, ShapeClass::Acute, ShapeClass::Right,
                           ShapeClass::Obtuse}) {
      CAPTURE(n);
      CAPTURE(to_string(cls));
      const IntPolynomial p = numerator_from_sequence(t, cls);
      const auto series = expand_gf(GenFunction{p}, t.rows.size());
      const auto column = t.column(cls);
      for (std::size_t i = 0; i < column.size(); ++i) CHECK(series[i] == column[i]);
      if (cls == ShapeClass::Acute) CHECK(divides(x_plus_1(), p));
      if (cls == ShapeClass::Right) CHECK(divides(poly_mul(x_minus_1(), x_plus_1()), p));
      if (cls == ShapeClass::Iso) CHECK(p.degree() <= expected_K(n) + 4);
    }
  }
}

TEST_CASE("pretty printing") {
  CHECK(to_pretty_string(IntPolynomial{0, -4, -2, 4}) == "4x^3 - 2x^2 - 4x");
  CHECK(to_pretty_string(IntPolynomial{}) == "0");
  CHECK(to_coefficient_string(IntPolynomial{0, -4, -2, 4}) == "0 -4 -2 4");
}

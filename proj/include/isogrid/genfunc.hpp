#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "isogrid/census.hpp"
#include "isogrid/sequences.hpp"

namespace isogrid {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial, coefficients in ascending powers with no trailing
// zeros; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<std::int64_t> ascending);

  static IntPolynomial monomial(BigInt coeff, std::size_t power);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt operator[](std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void canonicalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_pow(const IntPolynomial& a, unsigned exponent);

// Division over the integers. Throws InvalidArgument for a zero divisor or
// when a quotient coefficient would not be an integer.
std::pair<IntPolynomial, IntPolynomial> poly_divmod(const IntPolynomial& a,
                                                    const IntPolynomial& b);
bool divides(const IntPolynomial& divisor, const IntPolynomial& a);

// Ascending coefficients separated by spaces; "0" for the zero polynomial.
std::string to_coefficient_string(const IntPolynomial& p);
// Human form, highest power first, e.g. "4x^3 - 2x^2 - 4x".
std::string to_pretty_string(const IntPolynomial& p);

// (x-1)^3 (x+1) = x^4 - 2x^3 + 2x - 1.
const IntPolynomial& census_denominator();

struct GenFunction {
  IntPolynomial numerator;
  IntPolynomial denominator = census_denominator();
};

// Numerator degree bound K(n) + 4 used when no explicit bound is given.
std::int64_t numerator_degree_bound(std::int64_t n);

// Multiplies sum_{k>=1} a(k) x^(k-1) by the census denominator. The table must
// start at k = 1 and hold at least degree_bound + 9 terms; every product
// coefficient past the bound inside the table window must vanish, otherwise
// RecurrenceTailError names the first offending index.
IntPolynomial numerator_from_sequence(const SequenceTable& table, ShapeClass cls,
                                      std::optional<std::int64_t> degree_bound = std::nullopt);

// First `terms` power-series coefficients of numerator / denominator.
std::vector<BigInt> expand_gf(const GenFunction& gf, std::size_t terms);

struct GfFixture {
  std::int64_t n = 0;
  ShapeClass cls = ShapeClass::Iso;
  IntPolynomial numerator;
};

// Parses lines `n <class> c0 c1 ...`; `#` starts a comment.
std::vector<GfFixture> parse_fixtures(std::string_view text);
std::vector<GfFixture> load_fixtures(const std::string& path);
// Fixtures compiled into the library.
const std::vector<GfFixture>& builtin_fixtures();

struct CoefficientDiff {
  std::size_t power = 0;
  BigInt expected;
  BigInt actual;
};

struct ClassMatch {
  ShapeClass cls = ShapeClass::Iso;
  bool has_fixture = false;
  bool pass = false;
  IntPolynomial computed;
  IntPolynomial expected;
  std::vector<CoefficientDiff> diffs;
};

// Reconstructs all four numerators for n and compares them to the fixtures.
std::vector<ClassMatch> match_tables(std::int64_t n, const std::vector<GfFixture>& fixtures,
                                     int threads = 0);

}  // namespace isogrid

#include "isogrid/genfunc.hpp"

#include <fstream>
#include <sstream>

#include "isogrid/errors.hpp"

namespace isogrid {

std::string_view builtin_fixture_text();  // generated at build time

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  canonicalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> ascending) {
  coeffs_.reserve(ascending.size());
  for (auto c : ascending) coeffs_.emplace_back(c);
  canonicalize();
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, std::size_t power) {
  std::vector<BigInt> c(power + 1);
  c[power] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& a, unsigned exponent) {
  IntPolynomial out{1};
  for (unsigned i = 0; i < exponent; ++i) out = poly_mul(out, a);
  return out;
}

std::pair<IntPolynomial, IntPolynomial> poly_divmod(const IntPolynomial& a,
                                                    const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const BigInt& lead = bc.back();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {IntPolynomial{}, a};

  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) {
      throw InvalidArgument("polynomial division leaves a non-integer quotient");
    }
    const BigInt q = rem[i] / lead;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& a) {
  return poly_divmod(a, divisor).second.is_zero();
}

std::string to_coefficient_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) os << ' ';
    os << p.coefficients()[i];
  }
  return os.str();
}

std::string to_pretty_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    BigInt c = p.coefficients()[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

const IntPolynomial& census_denominator() {
  static const IntPolynomial d{-1, 2, 0, -2, 1};
  return d;
}

std::int64_t numerator_degree_bound(std::int64_t n) { return expected_K(n) + 4; }

IntPolynomial numerator_from_sequence(const SequenceTable& table, ShapeClass cls,
                                      std::optional<std::int64_t> degree_bound) {
  if (table.k_first != 1) throw InvalidArgument("numerator_from_sequence needs k_first == 1");
  const std::int64_t bound = degree_bound.value_or(numerator_degree_bound(table.n));
  const auto len = static_cast<std::int64_t>(table.rows.size());
  if (bound < 0 || len < bound + 9) {
    throw InvalidArgument("table for n=" + std::to_string(table.n) + " has " +
                          std::to_string(len) + " terms; degree bound " +
                          std::to_string(bound) + " needs at least " +
                          std::to_string(bound + 9));
  }
  const auto& den = census_denominator().coefficients();
  std::vector<BigInt> product(static_cast<std::size_t>(len));
  for (std::size_t i = 0; i < product.size(); ++i) {
    for (std::size_t t = 0; t < den.size() && t <= i; ++t) {
      product[i] += den[t] * table.rows[i - t].get(cls);
    }
  }
  for (auto i = static_cast<std::size_t>(bound + 1); i < product.size(); ++i) {
    if (product[i] != 0) {
      std::ostringstream os;
      os << "sequence does not satisfy the recurrence at claimed range: coefficient " << i
         << " of the numerator for n=" << table.n << " (" << to_string(cls) << ") is "
         << product[i];
      throw RecurrenceTailError(i, os.str());
    }
  }
  product.resize(static_cast<std::size_t>(bound + 1));
  return IntPolynomial(std::move(product));
}

std::vector<BigInt> expand_gf(const GenFunction& gf, std::size_t terms) {
  const auto& den = gf.denominator.coefficients();
  if (den.empty() || den[0] == 0) {
    throw InvalidArgument("denominator must have a nonzero constant term");
  }
  std::vector<BigInt> series(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    BigInt acc = gf.numerator[j];
    for (std::size_t t = 1; t < den.size() && t <= j; ++t) acc -= den[t] * series[j - t];
    if (acc % den[0] != 0) throw InvalidArgument("power series is not integral");
    series[j] = acc / den[0];
  }
  return series;
}

std::vector<GfFixture> parse_fixtures(std::string_view text) {
  std::vector<GfFixture> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string cls_name;
    GfFixture fx;
    if (!(ls >> fx.n)) continue;
    if (!(ls >> cls_name)) {
      throw InvalidArgument("fixture line " + std::to_string(lineno) + ": missing class");
    }
    auto cls = parse_shape_class(cls_name);
    if (!cls) {
      throw InvalidArgument("fixture line " + std::to_string(lineno) + ": unknown class '" +
                            cls_name + "'");
    }
    fx.cls = *cls;
    std::vector<BigInt> coeffs;
    std::string tok;
    while (ls >> tok) {
      try {
        coeffs.emplace_back(tok);
      } catch (const std::exception&) {
        throw InvalidArgument("fixture line " + std::to_string(lineno) + ": bad coefficient '" +
                              tok + "'");
      }
    }
    fx.numerator = IntPolynomial(std::move(coeffs));
    out.push_back(std::move(fx));
  }
  return out;
}

std::vector<GfFixture> load_fixtures(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open fixture file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_fixtures(buf.str());
}

const std::vector<GfFixture>& builtin_fixtures() {
  static const std::vector<GfFixture> fixtures = parse_fixtures(builtin_fixture_text());
  return fixtures;
}

std::vector<ClassMatch> match_tables(std::int64_t n, const std::vector<GfFixture>& fixtures,
                                     int threads) {
  const std::int64_t bound = numerator_degree_bound(n);
  const SequenceTable table = build_table(n, bound + 9, threads);
  std::vector<ClassMatch> out;
  for (ShapeClass cls : {ShapeClass::Iso, ShapeClass::Acute, ShapeClass::Right,
                         ShapeClass::Obtuse}) {
    ClassMatch m;
    m.cls = cls;
    m.computed = numerator_from_sequence(table, cls, bound);
    for (const auto& fx : fixtures) {
      if (fx.n == n && fx.cls == cls) {
        m.has_fixture = true;
        m.expected = fx.numerator;
      }
    }
    if (m.has_fixture) {
      const std::size_t len = std::max(m.computed.coefficients().size(),
                                       m.expected.coefficients().size());
      for (std::size_t i = 0; i < len; ++i) {
        if (m.computed[i] != m.expected[i]) m.diffs.push_back({i, m.expected[i], m.computed[i]});
      }
      m.pass = m.diffs.empty();
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace isogrid

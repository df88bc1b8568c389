#include "isogrid/decomposition.hpp"

#include <cmath>

#include "isogrid/errors.hpp"

namespace isogrid {

namespace {

enum class Part { First, Middle, Last };

Part part_of(const GridPoint& p, std::int64_t cols) {
  if (p.col == 0) return Part::First;
  if (p.col == cols - 1) return Part::Last;
  return Part::Middle;
}

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

ColumnDecomposition decompose(const GridDims& dims) {
  dims.validate();
  if (dims.cols < 3) throw InvalidArgument("decompose needs at least 3 columns");

  std::vector<GridPoint> points;
  points.reserve(static_cast<std::size_t>(dims.point_count()));
  for (std::int64_t r = 0; r < dims.rows; ++r)
    for (std::int64_t c = 0; c < dims.cols; ++c) points.push_back({r, c});

  ColumnDecomposition out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t l = j + 1; l < points.size(); ++l) {
        const TriangleShape shape = classify(points[i], points[j], points[l]);
        if (!shape.isosceles) continue;
        int first = 0, middle = 0, last = 0;
        for (const auto* p : {&points[i], &points[j], &points[l]}) {
          switch (part_of(*p, dims.cols)) {
            case Part::First: ++first; break;
            case Part::Middle: ++middle; break;
            case Part::Last: ++last; break;
          }
        }
        if (last > 0) ++out.b;
        if (first > 0 && last > 0) {
          ++out.c;
          if (middle == 0) {
            ++out.a_count;
          } else {
            ++out.b_count;
          }
        }
      }
    }
  }
  return out;
}

std::int64_t outer_column_count(std::int64_t n) { return (n - 1) * (n - 1) / 2; }

std::int64_t c_closed_form(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidArgument("c_closed_form needs n >= 1");
  if (k <= (n - 1) * (n - 1) + 1) {
    throw OutOfRegime("c closed form only holds for k > (n-1)^2 + 1");
  }
  const std::int64_t base = outer_column_count(n);
  return k % 2 == 1 ? n * (n - 1) + base : base;
}

bool lemma3_check(std::int64_t n) {
  if (n < 1) throw InvalidArgument("lemma3_check needs n >= 1");
  std::int64_t sum = 0;
  for (std::int64_t m = 1; m <= (n - 1) / 2; ++m) sum += n - 2 * m;
  return 2 * sum == outer_column_count(n);
}

std::vector<LemmaViolation> lemma12_exhaust(const IdentityCheckConfig& cfg) {
  if (cfg.n_max < 1 || cfg.y_max < 1) {
    throw InvalidArgument("lemma exhaustion bounds must be positive");
  }
  std::vector<LemmaViolation> found;
  for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
    for (int lemma : {1, 2}) {
      const std::int64_t lo = lemma == 1 ? 1 : 0;
      // Smallest y with 2y > n^2 (lemma 1) or 2y > n^2 + 1 (lemma 2).
      const std::int64_t threshold = lemma == 1 ? n * n : n * n + 1;
      const std::int64_t y_min = threshold / 2 + 1;
      for (std::int64_t y = y_min; y <= cfg.y_max; ++y) {
        for (std::int64_t x = lo; x <= n; ++x) {
          for (std::int64_t u = lo; u <= n; ++u) {
            const std::int64_t w2 = x * x + y * y - u * u;
            if (w2 < 0) continue;
            const std::int64_t w = isqrt(w2);
            if (w * w != w2) continue;
            if (x != u || y != w) found.push_back({lemma, n, x, y, u, w});
          }
        }
      }
    }
  }
  return found;
}

std::string to_string(const LemmaViolation& v) {
  return "lemma " + std::to_string(v.lemma) + " n=" + std::to_string(v.n) +
         " x=" + std::to_string(v.x) + " y=" + std::to_string(v.y) +
         " u=" + std::to_string(v.u) + " w=" + std::to_string(v.w);
}

}  // namespace isogrid

#include "isogrid/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "isogrid/errors.hpp"

namespace isogrid {

void GridDims::validate() const {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("grid dimensions must be positive, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
  // C(P,2) * P must fit a signed 64-bit count.
  const __int128 p = static_cast<__int128>(rows) * cols;
  const __int128 bound = p * (p - 1) / 2 * p;
  if (bound > std::numeric_limits<std::int64_t>::max()) {
    throw OverflowError("grid " + std::to_string(rows) + "x" +
                        std::to_string(cols) +
                        " is too large for 64-bit triangle counts");
  }
}

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Degenerate:
      return "degenerate";
    case ShapeKind::Acute:
      return "acute";
    case ShapeKind::Right:
      return "right";
    case ShapeKind::Obtuse:
      return "obtuse";
  }
  return "?";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 add overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("int64 sub overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 mul overflow");
  return out;
}

SquaredLength squared_distance(const GridPoint& p, const GridPoint& q) {
  const std::int64_t dr = checked_sub(p.row, q.row);
  const std::int64_t dc = checked_sub(p.col, q.col);
  return {checked_add(checked_mul(dr, dr), checked_mul(dc, dc))};
}

std::int64_t cross(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
  const std::int64_t ar = checked_sub(q.row, p.row);
  const std::int64_t ac = checked_sub(q.col, p.col);
  const std::int64_t br = checked_sub(r.row, p.row);
  const std::int64_t bc = checked_sub(r.col, p.col);
  return checked_sub(checked_mul(ar, bc), checked_mul(ac, br));
}

TriangleShape shape_from_sides(std::int64_t s1, std::int64_t s2,
                               std::int64_t s3) {
  std::array<std::int64_t, 3> s{s1, s2, s3};
  std::sort(s.begin(), s.end());
  const std::int64_t legs = checked_add(s[0], s[1]);
  TriangleShape shape;
  if (legs == s[2]) {
    shape.kind = ShapeKind::Right;
  } else if (legs < s[2]) {
    shape.kind = ShapeKind::Obtuse;
  } else {
    shape.kind = ShapeKind::Acute;
  }
  shape.isosceles = s[0] == s[1] || s[1] == s[2];
  return shape;
}

TriangleShape classify(const GridPoint& p, const GridPoint& q,
                       const GridPoint& r) {
  if (p == q || q == r || p == r) {
    throw InvalidArgument("classify needs three distinct points");
  }
  if (collinear(p, q, r)) return {};
  return shape_from_sides(squared_distance(p, q).value,
                          squared_distance(q, r).value,
                          squared_distance(p, r).value);
}

}  // namespace isogrid

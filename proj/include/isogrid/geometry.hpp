#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

namespace isogrid {

// Extents of an n-by-k lattice: `rows` plays the role of n, `cols` of k.
struct GridDims {
  std::int64_t rows = 1;
  std::int64_t cols = 1;

  // Throws InvalidArgument unless rows, cols >= 1 and OverflowError when
  // C(P,2)*P for P = rows*cols does not fit a signed 64-bit count.
  void validate() const;
  std::int64_t point_count() const { return rows * cols; }
  GridDims transposed() const { return {cols, rows}; }

  friend auto operator<=>(const GridDims&, const GridDims&) = default;
};

// 0-based (row, col) lattice coordinates.
struct GridPoint {
  std::int64_t row = 0;
  std::int64_t col = 0;

  bool in_bounds(const GridDims& dims) const {
    return row >= 0 && col >= 0 && row < dims.rows && col < dims.cols;
  }

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Exact squared Euclidean distance, in squared lattice steps.
struct SquaredLength {
  std::int64_t value = 0;

  friend auto operator<=>(const SquaredLength&, const SquaredLength&) = default;
};

enum class ShapeKind { Degenerate, Acute, Right, Obtuse };

std::string_view to_string(ShapeKind kind);

struct TriangleShape {
  ShapeKind kind = ShapeKind::Degenerate;
  bool isosceles = false;  // always false for Degenerate

  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;
};

// Checked 64-bit helpers; throw OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

SquaredLength squared_distance(const GridPoint& p, const GridPoint& q);

// Twice the signed area of pqr; zero iff the points are collinear.
std::int64_t cross(const GridPoint& p, const GridPoint& q, const GridPoint& r);

inline bool collinear(const GridPoint& p, const GridPoint& q,
                      const GridPoint& r) {
  return cross(p, q, r) == 0;
}

// Shape of a triangle from its three squared side lengths (any order) for a
// triple already known to be non-collinear.
TriangleShape shape_from_sides(std::int64_t s1, std::int64_t s2,
                               std::int64_t s3);

// Throws InvalidArgument if any two points coincide.
TriangleShape classify(const GridPoint& p, const GridPoint& q,
                       const GridPoint& r);

}  // namespace isogrid

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "isogrid/errors.hpp"
#include "isogrid/geometry.hpp"

using namespace isogrid;

namespace {

// Law-of-cosines classifier on doubles; only valid for the small
// coordinates used here.
TriangleShape float_classify(GridPoint p, GridPoint q, GridPoint r) {
  auto len = [](GridPoint a, GridPoint b) {
    return std::hypot(double(a.row - b.row), double(a.col - b.col));
  };
  std::array<double, 3> s{len(p, q), len(q, r), len(p, r)};
  std::sort(s.begin(), s.end());
  if (s[0] + s[1] - s[2] < 1e-9) return {};
  const double cos_largest = (s[0] * s[0] + s[1] * s[1] - s[2] * s[2]) / (2 * s[0] * s[1]);
  TriangleShape t;
  if (std::abs(cos_largest) < 1e-9) {
    t.kind = ShapeKind::Right;
  } else {
    t.kind = cos_largest < 0 ? ShapeKind::Obtuse : ShapeKind::Acute;
  }
  t.isosceles = std::abs(s[0] - s[1]) < 1e-9 || std::abs(s[1] - s[2]) < 1e-9;
  return t;
}

std::vector<GridPoint> grid_points(std::int64_t rows, std::int64_t cols) {
  std::vector<GridPoint> pts;
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) pts.push_back({r, c});
  return pts;
}

}  // namespace

TEST_CASE("squared_distance examples") {
  CHECK(squared_distance({0, 0}, {0, 0}).value == 0);
  CHECK(squared_distance({0, 0}, {1, 1}).value == 2);
  CHECK(squared_distance({0, 0}, {1, 2}).value == 5);
  CHECK(squared_distance({3, 7}, {0, 3}).value == 25);
}

TEST_CASE("classify examples") {
  CHECK(classify({0, 0}, {0, 1}, {1, 0}) == TriangleShape{ShapeKind::Right, true});
  CHECK(classify({0, 0}, {0, 2}, {0, 5}).kind == ShapeKind::Degenerate);
  CHECK_FALSE(classify({0, 0}, {0, 2}, {0, 5}).isosceles);
  // sides^2 5, 5, 16
  CHECK(classify({0, 0}, {1, 2}, {0, 4}) == TriangleShape{ShapeKind::Obtuse, true});
  CHECK(classify({0, 0}, {0, 1}, {2, 3}) == TriangleShape{ShapeKind::Obtuse, false});
  CHECK(classify({0, 0}, {2, 1}, {1, 2}) == TriangleShape{ShapeKind::Acute, true});
}

TEST_CASE("classify rejects duplicate points") {
  CHECK_THROWS_AS(classify({1, 1}, {1, 1}, {0, 2}), InvalidArgument);
  CHECK_THROWS_AS(classify({0, 0}, {1, 1}, {0, 0}), InvalidArgument);
}

TEST_CASE("collinear triples that look obtuse are still degenerate") {
  // 1 + 4 < 9 would read as obtuse if only side lengths were compared.
  CHECK(classify({0, 0}, {0, 1}, {0, 3}).kind == ShapeKind::Degenerate);
  CHECK(classify({0, 0}, {1, 1}, {3, 3}).kind == ShapeKind::Degenerate);
}

TEST_CASE("arithmetic overflow is a hard error") {
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK_THROWS_AS(squared_distance({0, 0}, {big, big}), OverflowError);
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 62, 4), OverflowError);
  CHECK_NOTHROW(squared_distance({0, 0}, {1 << 30, 1 << 30}));
}

TEST_CASE("GridDims validation") {
  CHECK_THROWS_AS(GridDims({0, 3}).validate(), InvalidArgument);
  CHECK_THROWS_AS(GridDims({3, -1}).validate(), InvalidArgument);
  CHECK_NOTHROW(GridDims({1000, 1000}).validate());
  CHECK_THROWS_AS(GridDims({1'000'000, 1'000'000}).validate(), OverflowError);
}

TEST_CASE("classify is invariant under argument order and grid symmetries") {
  std::mt19937_64 rng(20170206);
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  int checked = 0;
  while (checked < 2000) {
    GridPoint p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)}, r{coord(rng), coord(rng)};
    if (p == q || q == r || p == r) continue;
    const TriangleShape ref = classify(p, q, r);
    std::array<GridPoint, 3> pts{p, q, r};
    std::sort(pts.begin(), pts.end());
    do {
      CHECK(classify(pts[0], pts[1], pts[2]) == ref);
    } while (std::next_permutation(pts.begin(), pts.end()));

    const std::int64_t dr = coord(rng), dc = coord(rng);
    auto translate = [&](GridPoint a) { return GridPoint{a.row + dr, a.col + dc}; };
    auto flip_row = [](GridPoint a) { return GridPoint{-a.row, a.col}; };
    auto flip_col = [](GridPoint a) { return GridPoint{a.row, -a.col}; };
    auto rotate = [](GridPoint a) { return GridPoint{a.col, -a.row}; };
    CHECK(classify(translate(p), translate(q), translate(r)) == ref);
    CHECK(classify(flip_row(p), flip_row(q), flip_row(r)) == ref);
    CHECK(classify(flip_col(p), flip_col(q), flip_col(r)) == ref);
    CHECK(classify(rotate(p), rotate(q), rotate(r)) == ref);
    ++checked;
  }
}

TEST_CASE("no equilateral lattice triangles in grids up to 25 points") {
  std::int64_t equilateral = 0;
  for (std::int64_t rows = 1; rows <= 25; ++rows) {
    for (std::int64_t cols = 1; rows * cols <= 25; ++cols) {
      const auto pts = grid_points(rows, cols);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          for (std::size_t l = j + 1; l < pts.size(); ++l) {
            if (collinear(pts[i], pts[j], pts[l])) continue;
            const auto a = squared_distance(pts[i], pts[j]);
            const auto b = squared_distance(pts[j], pts[l]);
            const auto c = squared_distance(pts[i], pts[l]);
            if (a == b && b == c) ++equilateral;
          }
    }
  }
  CHECK(equilateral == 0);
}

TEST_CASE("exact classifier agrees with the floating-point classifier up to 6x6") {
  const auto pts = grid_points(6, 6);
  std::int64_t compared = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const TriangleShape exact = classify(pts[i], pts[j], pts[l]);
        const TriangleShape approx = float_classify(pts[i], pts[j], pts[l]);
        REQUIRE(exact == approx);
        ++compared;
      }
  CHECK(compared == 7140);  // C(36, 3)
}

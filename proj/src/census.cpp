#include "isogrid/census.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "isogrid/errors.hpp"

namespace isogrid {

std::string_view to_string(ShapeClass cls) {
  switch (cls) {
    case ShapeClass::Iso:
      return "iso";
    case ShapeClass::Acute:
      return "acute";
    case ShapeClass::Right:
      return "right";
    case ShapeClass::Obtuse:
      return "obtuse";
  }
  return "?";
}

std::optional<ShapeClass> parse_shape_class(std::string_view name) {
  if (name == "iso" || name == "total") return ShapeClass::Iso;
  if (name == "acute") return ShapeClass::Acute;
  if (name == "right") return ShapeClass::Right;
  if (name == "obtuse") return ShapeClass::Obtuse;
  return std::nullopt;
}

std::int64_t CensusCounts::get(ShapeClass cls) const {
  switch (cls) {
    case ShapeClass::Iso:
      return total_iso;
    case ShapeClass::Acute:
      return acute_iso;
    case ShapeClass::Right:
      return right_iso;
    case ShapeClass::Obtuse:
      return obtuse_iso;
  }
  return 0;
}

void CensusCounts::add(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Acute:
      ++acute_iso;
      break;
    case ShapeKind::Right:
      ++right_iso;
      break;
    case ShapeKind::Obtuse:
      ++obtuse_iso;
      break;
    case ShapeKind::Degenerate:
      return;
  }
  ++total_iso;
}

namespace {

GridPoint point_at(const GridDims& dims, std::int64_t index) {
  return {index / dims.cols, index % dims.cols};
}

// Apex angle decides the shape: base^2 vs 2*leg^2.
ShapeKind apex_shape(std::int64_t leg, std::int64_t base) {
  const std::int64_t twice_leg = 2 * leg;
  if (base == twice_leg) return ShapeKind::Right;
  return base > twice_leg ? ShapeKind::Obtuse : ShapeKind::Acute;
}

// Isosceles triangles whose apex is point `apex`. `scratch` is reused
// between calls to avoid reallocating per apex.
void count_at_apex(const GridDims& dims, std::int64_t apex,
                   std::vector<std::pair<std::int64_t, std::int64_t>>& scratch,
                   CensusCounts& out) {
  const GridPoint p = point_at(dims, apex);
  const std::int64_t total = dims.point_count();
  scratch.clear();
  for (std::int64_t i = 0; i < total; ++i) {
    if (i == apex) continue;
    const GridPoint q = point_at(dims, i);
    const std::int64_t dr = q.row - p.row;
    const std::int64_t dc = q.col - p.col;
    scratch.emplace_back(dr * dr + dc * dc, i);
  }
  std::sort(scratch.begin(), scratch.end());

  std::size_t begin = 0;
  while (begin < scratch.size()) {
    std::size_t end = begin + 1;
    while (end < scratch.size() && scratch[end].first == scratch[begin].first) ++end;
    const std::int64_t leg = scratch[begin].first;
    for (std::size_t a = begin; a < end; ++a) {
      const GridPoint q = point_at(dims, scratch[a].second);
      for (std::size_t b = a + 1; b < end; ++b) {
        const GridPoint r = point_at(dims, scratch[b].second);
        // Same distance and collinear means p is the midpoint of qr.
        if (q.row + r.row == 2 * p.row && q.col + r.col == 2 * p.col) continue;
        const std::int64_t dr = q.row - r.row;
        const std::int64_t dc = q.col - r.col;
        out.add(apex_shape(leg, dr * dr + dc * dc));
      }
    }
    begin = end;
  }
}

}  // namespace

OracleCensus brute_force_census_detailed(const GridDims& dims,
                                         std::int64_t point_cap) {
  dims.validate();
  const std::int64_t total = dims.point_count();
  if (total > point_cap) {
    throw ResourceRefused("brute-force census refuses " + std::to_string(total) +
                          " points (cap " + std::to_string(point_cap) +
                          "); use apex_census");
  }
  OracleCensus result;
  for (std::int64_t i = 0; i < total; ++i) {
    const GridPoint p = point_at(dims, i);
    for (std::int64_t j = i + 1; j < total; ++j) {
      const GridPoint q = point_at(dims, j);
      for (std::int64_t l = j + 1; l < total; ++l) {
        const TriangleShape shape = classify(p, q, point_at(dims, l));
        if (shape.kind == ShapeKind::Degenerate) continue;
        ++result.nondegenerate;
        if (shape.isosceles) result.counts.add(shape.kind);
      }
    }
  }
  return result;
}

CensusCounts brute_force_census(const GridDims& dims, std::int64_t point_cap) {
  return brute_force_census_detailed(dims, point_cap).counts;
}

CensusCounts apex_census_serial(const GridDims& dims) {
  dims.validate();
  CensusCounts counts;
  std::vector<std::pair<std::int64_t, std::int64_t>> scratch;
  scratch.reserve(static_cast<std::size_t>(dims.point_count()));
  for (std::int64_t apex = 0; apex < dims.point_count(); ++apex) {
    count_at_apex(dims, apex, scratch, counts);
  }
  return counts;
}

CensusCounts apex_census(const GridDims& dims, int threads) {
  dims.validate();
  const std::int64_t total = dims.point_count();
  const int workers = threads > 0 ? threads : omp_get_max_threads();

  std::int64_t acute = 0, right = 0, obtuse = 0;
#pragma omp parallel num_threads(workers) reduction(+ : acute, right, obtuse)
  {
    std::vector<std::pair<std::int64_t, std::int64_t>> scratch;
    scratch.reserve(static_cast<std::size_t>(total));
    CensusCounts local;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t apex = 0; apex < total; ++apex) {
      count_at_apex(dims, apex, scratch, local);
    }
    acute += local.acute_iso;
    right += local.right_iso;
    obtuse += local.obtuse_iso;
  }
  return {acute + right + obtuse, acute, right, obtuse};
}

CensusCounts census_row(std::int64_t n, std::int64_t k, int threads) {
  if (n < 1 || k < 1) throw InvalidArgument("census_row needs n, k >= 1");
  const GridDims dims = n <= k ? GridDims{n, k} : GridDims{k, n};
  return apex_census(dims, threads);
}

}  // namespace isogrid

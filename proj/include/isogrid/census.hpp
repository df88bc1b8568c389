#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "isogrid/geometry.hpp"

namespace isogrid {

// Which column of a census a quantity refers to. `Iso` is the total count of
// isosceles triangles; the others restrict it by the largest angle.
enum class ShapeClass { Iso, Acute, Right, Obtuse };

std::string_view to_string(ShapeClass cls);
// Accepts "iso", "total", "acute", "right", "obtuse".
std::optional<ShapeClass> parse_shape_class(std::string_view name);

struct CensusCounts {
  std::int64_t total_iso = 0;
  std::int64_t acute_iso = 0;
  std::int64_t right_iso = 0;
  std::int64_t obtuse_iso = 0;

  std::int64_t get(ShapeClass cls) const;
  void add(ShapeKind kind);

  CensusCounts& operator+=(const CensusCounts& o) {
    total_iso += o.total_iso;
    acute_iso += o.acute_iso;
    right_iso += o.right_iso;
    obtuse_iso += o.obtuse_iso;
    return *this;
  }

  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

inline constexpr std::int64_t kDefaultOracleCap = 400;

struct OracleCensus {
  CensusCounts counts;
  std::int64_t nondegenerate = 0;  // all non-collinear triples, isosceles or not
};

// Cubic reference: classifies every unordered triple. Throws ResourceRefused
// when rows*cols exceeds `point_cap`.
OracleCensus brute_force_census_detailed(const GridDims& dims,
                                         std::int64_t point_cap = kDefaultOracleCap);
CensusCounts brute_force_census(const GridDims& dims,
                                std::int64_t point_cap = kDefaultOracleCap);

// Apex-grouping census, single threaded. Kept as the reference for the
// parallel kernel below.
CensusCounts apex_census_serial(const GridDims& dims);

// Apex-grouping census with the apex loop split across OpenMP threads.
// `threads == 0` uses the OpenMP default. Bit-identical to the serial run.
CensusCounts apex_census(const GridDims& dims, int threads = 0);

// a_n(k) with all class restrictions; runs the apex pass on the orientation
// with fewer rows.
CensusCounts census_row(std::int64_t n, std::int64_t k, int threads = 0);

}  // namespace isogrid

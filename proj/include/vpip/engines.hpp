// Copyright 2026 the vpip authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vpip/geometry.hpp"
#include "vpip/voronoi.hpp"

namespace vpip {

/// Structure-of-arrays query points. xs and ys always have equal length and
/// hold finite values only (the samplers and file readers enforce this).
struct PointBatch {
  std::vector<double> xs;
  std::vector<double> ys;

  std::size_t size() const noexcept { return xs.size(); }
  bool empty() const noexcept { return xs.empty(); }
  Point2 at(std::size_t i) const { return {xs[i], ys[i]}; }

  void reserve(std::size_t n) {
    xs.reserve(n);
    ys.reserve(n);
  }
  void push_back(Point2 p) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }

  static PointBatch from_points(std::span<const Point2> points);

  friend bool operator==(const PointBatch&, const PointBatch&) = default;
};

/// One byte per query point, 1 = inside (boundary included), 0 = outside.
using InclusionMask = std::vector<std::uint8_t>;

std::size_t count_inside(const InclusionMask& mask);

/// Work counters reported by the instrumented batch kernels.
struct BatchStats {
  std::uint64_t distance_evaluations = 0;
  std::uint64_t comparisons = 0;
};

enum class EngineKind { Voronoi, SignOfOffset, RayCrossing };

inline constexpr std::array<EngineKind, 3> kAllEngines = {
    EngineKind::Voronoi, EngineKind::SignOfOffset, EngineKind::RayCrossing};

std::string_view engine_name(EngineKind kind);

/// Accepts the canonical names plus the short aliases "offset" and
/// "crossing". Returns nullopt for anything else.
std::optional<EngineKind> parse_engine(std::string_view name);

// ---------------------------------------------------------------------------
// Voronoi nearest-generator engine.
//
// A point is inside iff its squared distance to the inner generator is no
// larger than its squared distance to every outer generator; ties (exact
// boundary) count as inside. Batch kernels are branchless over the points:
// per batch they perform exactly (n+1)*m squared-distance evaluations and
// n*m comparisons, with no per-point data-dependent control flow. `threads`
// splits the batch into contiguous chunks; the mask does not depend on the
// partitioning.

/// Scalar test; returns on the first outer generator found closer than the
/// inner one.
bool voronoi_contains(const GeneratorSet& generators, Point2 p);

InclusionMask voronoi_contains_batch(const GeneratorSet& generators,
                                     const PointBatch& points, int threads = 1);

/// Instrumented variant; adds the work performed to `stats`.
InclusionMask voronoi_contains_batch(const GeneratorSet& generators,
                                     const PointBatch& points, BatchStats& stats,
                                     int threads = 1);

/// Verification path comparing true L2 distances instead of squared ones.
/// Produces the same mask; exists so tests can assert exactly that.
InclusionMask voronoi_contains_batch_sqrt(const GeneratorSet& generators,
                                          const PointBatch& points,
                                          int threads = 1);

/// (n+1) x m table of squared generator-to-point distances; row 0 belongs to
/// the inner generator, row k to outer[k-1]. Debug/verification helper, not
/// used by the production kernel (which streams one row at a time).
struct SquaredDistanceTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double at(std::size_t row, std::size_t col) const { return values[row * cols + col]; }
};

SquaredDistanceTable squared_distance_table(const GeneratorSet& generators,
                                            const PointBatch& points);

// ---------------------------------------------------------------------------
// Sign-of-offset engine (convex polygons only).
//
// A point is inside iff it falls on the same side of every edge's supporting
// line; a point exactly on a line counts as inside.

bool sign_of_offset_contains(const ConvexPolygon& polygon, Point2 p);

InclusionMask sign_of_offset_contains_batch(const ConvexPolygon& polygon,
                                            const PointBatch& points,
                                            int threads = 1);

// ---------------------------------------------------------------------------
// Ray-crossing engine. Works for any simple polygon, convex or not; vertices
// may be in either orientation. Inside = odd number of crossings of a +x ray,
// or the point lies exactly on an edge segment (closed boundary).

bool ray_crossing_contains(std::span<const Point2> vertices, Point2 p);

/// Number of edges the +x ray from p crosses. Diagnostic helper.
int ray_crossing_count(std::span<const Point2> vertices, Point2 p);

InclusionMask ray_crossing_contains_batch(std::span<const Point2> vertices,
                                          const PointBatch& points,
                                          int threads = 1);

}  // namespace vpip

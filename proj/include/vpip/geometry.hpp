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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "vpip/error.hpp"
#include "vpip/tolerances.hpp"

namespace vpip {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

constexpr double squared_distance(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Point2 a, Point2 b) { return std::sqrt(squared_distance(a, b)); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Axis-aligned box, used for query-point sampling.
struct Box {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  Point2 center() const { return {0.5 * (min_x + max_x), 0.5 * (min_y + max_y)}; }

  bool valid() const {
    return std::isfinite(min_x) && std::isfinite(min_y) && std::isfinite(max_x) &&
           std::isfinite(max_y) && min_x < max_x && min_y < max_y;
  }

  /// Box with the same center and extents scaled by `factor`.
  Box scaled(double factor) const {
    const Point2 c = center();
    const double hw = 0.5 * factor * width();
    const double hh = 0.5 * factor * height();
    return {c.x - hw, c.y - hh, c.x + hw, c.y + hh};
  }

  friend constexpr bool operator==(const Box&, const Box&) = default;
};

/// Bounding box of a non-empty point sequence.
Box bounding_box(std::span<const Point2> points);

/// Strictly convex polygon with vertices in counter-clockwise order.
///
/// Instances only come out of validate_polygon(), so holding a ConvexPolygon
/// means: n >= 3, all coordinates finite, positive signed area, and every
/// cross product of successive edge vectors strictly positive. Clockwise
/// input is reversed on construction; was_reversed() reports it.
class ConvexPolygon {
public:
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Point2 vertex(std::size_t i) const { return vertices_[i]; }
  bool was_reversed() const noexcept { return reversed_; }

private:
  ConvexPolygon(std::vector<Point2> vertices, bool reversed)
      : vertices_(std::move(vertices)), reversed_(reversed) {}

  friend ConvexPolygon validate_polygon(std::vector<Point2> vertices,
                                        double convexity_epsilon);

  std::vector<Point2> vertices_;
  bool reversed_ = false;
};

/// Checks the ConvexPolygon invariants and normalizes orientation to CCW.
///
/// Throws Error with code TooFewVertices, NonFinite, DegenerateEdge or
/// NotConvex. `convexity_epsilon` is the absolute cross-product threshold
/// below which a vertex triple counts as collinear.
ConvexPolygon validate_polygon(std::vector<Point2> vertices,
                               double convexity_epsilon = tol::kConvexityCross);

/// Shoelace area; positive for CCW vertex order, negated by reversal.
double signed_area(std::span<const Point2> vertices);
double signed_area(const ConvexPolygon& polygon);

/// Area-weighted barycenter; strictly inside a valid convex polygon.
Point2 centroid(const ConvexPolygon& polygon);

}  // namespace vpip

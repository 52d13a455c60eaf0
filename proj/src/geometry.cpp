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

#include "vpip/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vpip {

namespace {

// Twice the signed area: sum of x_prev * y_cur - x_cur * y_prev over the
// cyclic vertex pairs.
double shoelace_sum(std::span<const Point2> v) {
  double sum = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    sum += v[j].x * v[i].y - v[i].x * v[j].y;
  }
  return sum;
}

}  // namespace

Box bounding_box(std::span<const Point2> points) {
  if (points.empty()) {
    throw Error(ErrorCode::InvalidParameter, "bounding box of an empty point set");
  }
  Box box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point2& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

ConvexPolygon validate_polygon(std::vector<Point2> vertices, double convexity_epsilon) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_finite(vertices[i])) {
      throw Error(ErrorCode::NonFinite, "vertex " + std::to_string(i));
    }
  }
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewVertices,
                std::to_string(n) + " vertices, a polygon needs at least 3");
  }
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (squared_distance(vertices[j], vertices[i]) <= tol::kDegenerateEdgeSq) {
      throw Error(ErrorCode::DegenerateEdge,
                  "vertices " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }

  bool reversed = false;
  if (shoelace_sum(vertices) < 0.0) {
    std::reverse(vertices.begin(), vertices.end());
    reversed = true;
  }

  // Strict convexity: every turn is a left turn by more than the epsilon.
  // All-left turns alone would also admit multi-winding traversals (e.g. a
  // pentagram), so the exterior angles must additionally sum to one full turn.
  double total_turn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 prev = vertices[(i + n - 1) % n];
    const Point2 cur = vertices[i];
    const Point2 next = vertices[(i + 1) % n];
    const Point2 in = cur - prev;
    const Point2 out = next - cur;
    if (cross(in, out) <= convexity_epsilon) {
      throw Error(ErrorCode::NotConvex,
                  "collinear or reflex vertex at index " + std::to_string(i));
    }
    total_turn += std::atan2(cross(in, out), dot(in, out));
  }
  if (total_turn >= 3.0 * std::numbers::pi) {
    throw Error(ErrorCode::NotConvex, "vertex sequence winds more than once");
  }

  return ConvexPolygon(std::move(vertices), reversed);
}

double signed_area(std::span<const Point2> vertices) {
  return 0.5 * shoelace_sum(vertices);
}

double signed_area(const ConvexPolygon& polygon) { return signed_area(polygon.vertices()); }

Point2 centroid(const ConvexPolygon& polygon) {
  const std::span<const Point2> v = polygon.vertices();
  const std::size_t n = v.size();
  double area2 = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double d = v[j].x * v[i].y - v[i].x * v[j].y;
    area2 += d;
    cx += (v[j].x + v[i].x) * d;
    cy += (v[j].y + v[i].y) * d;
  }
  // area2 is bounded away from zero by the convexity invariant
  return {cx / (3.0 * area2), cy / (3.0 * area2)};
}

}  // namespace vpip

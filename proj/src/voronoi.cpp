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

#include "vpip/voronoi.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace vpip {

EdgeCoefficients edge_coefficients(Point2 q_i, Point2 q_j, double degenerate_sq) {
  const double a = q_i.y - q_j.y;
  const double b = q_j.x - q_i.x;
  const double c = -(a * q_i.x + b * q_i.y);
  if (a * a + b * b <= degenerate_sq) {
    throw Error(ErrorCode::DegenerateEdge, "edge endpoints coincide");
  }
  return {a, b, c};
}

double line_distance(const EdgeCoefficients& e, Point2 p) {
  return std::abs(e.a * p.x + e.b * p.y + e.c) / std::hypot(e.a, e.b);
}

Point2 foot_of_perpendicular(Point2 p0, const EdgeCoefficients& e) {
  const double a = e.a;
  const double b = e.b;
  const double denom = a * a + b * b;
  const double x = (b * b * p0.x - a * b * p0.y - e.c * a) / denom;
  const double y = (-a * b * p0.x + a * a * p0.y - e.c * b) / denom;
  return {x, y};
}

Point2 reflect_generator(Point2 p0, const EdgeCoefficients& e, double collision_rel) {
  const double a = e.a;
  const double b = e.b;
  const double denom = a * a + b * b;
  // offset / edge_length <= collision_rel means the mirror image would land
  // on p0 itself; compare without the square roots
  if (std::abs(a * p0.x + b * p0.y + e.c) <= collision_rel * denom) {
    throw Error(ErrorCode::GeneratorCollision, "point lies on the edge line");
  }
  const double x = ((b * b - a * a) * p0.x - 2.0 * a * b * p0.y - 2.0 * e.c * a) / denom;
  const double y = (-2.0 * a * b * p0.x + (a * a - b * b) * p0.y - 2.0 * e.c * b) / denom;
  return {x, y};
}

GeneratorSet to_voronoi(const ConvexPolygon& polygon) {
  const std::span<const Point2> v = polygon.vertices();
  const std::size_t n = v.size();
  GeneratorSet generators;
  generators.inner = centroid(polygon);
  generators.outer.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const EdgeCoefficients e = edge_coefficients(v[k], v[(k + 1) % n]);
    generators.outer.push_back(reflect_generator(generators.inner, e));
  }
  return generators;
}

double edge_line_distance(const ConvexPolygon& polygon, Point2 p) {
  const std::span<const Point2> v = polygon.vertices();
  const std::size_t n = v.size();
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const EdgeCoefficients e = edge_coefficients(v[k], v[(k + 1) % n]);
    nearest = std::min(nearest, line_distance(e, p));
  }
  return nearest;
}

}  // namespace vpip

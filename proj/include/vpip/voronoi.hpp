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

#include <cstddef>
#include <vector>

#include "vpip/geometry.hpp"

namespace vpip {

/// Coefficients of the line a*x + b*y + c = 0 through one polygon edge.
struct EdgeCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  friend constexpr bool operator==(const EdgeCoefficients&, const EdgeCoefficients&) = default;
};

/// Line through the edge (q_i, q_j):
///   a = q_i.y - q_j.y,  b = q_j.x - q_i.x,  c = -(a*q_i.x + b*q_i.y).
/// Both endpoints satisfy a*x + b*y + c = 0. Throws DegenerateEdge when the
/// squared edge length a^2 + b^2 is at or below `degenerate_sq`.
EdgeCoefficients edge_coefficients(Point2 q_i, Point2 q_j,
                                   double degenerate_sq = tol::kDegenerateEdgeSq);

/// Distance from p to the line (always >= 0).
double line_distance(const EdgeCoefficients& e, Point2 p);

/// Closest point on the line to p0.
Point2 foot_of_perpendicular(Point2 p0, const EdgeCoefficients& e);

/// Mirror image of p0 across the line, computed in one fused form. Equals
/// 2*foot_of_perpendicular(p0, e) - p0. Throws GeneratorCollision when p0
/// lies on the line (distance at or below `collision_rel` times the edge
/// length), since the mirror image would coincide with p0.
Point2 reflect_generator(Point2 p0, const EdgeCoefficients& e,
                         double collision_rel = tol::kGeneratorCollision);

/// Generator-point equivalent of a convex polygon: the polygon is exactly
/// the set of points at least as close to `inner` as to every `outer` entry.
/// outer[k] belongs to edge k, the edge joining vertex k and vertex k+1; the
/// midpoint of (inner, outer[k]) lies on that edge's line and the segment
/// between them is perpendicular to it.
struct GeneratorSet {
  Point2 inner;
  std::vector<Point2> outer;

  std::size_t edge_count() const noexcept { return outer.size(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Builds the generator set: inner = centroid(polygon), outer[k] = centroid
/// mirrored across edge k. One reflection per edge, in edge order, so the
/// result is reproducible byte for byte.
GeneratorSet to_voronoi(const ConvexPolygon& polygon);

/// Distance from p to the nearest edge supporting line of the polygon.
double edge_line_distance(const ConvexPolygon& polygon, Point2 p);

}  // namespace vpip

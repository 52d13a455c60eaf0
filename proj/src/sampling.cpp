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

#include "vpip/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace vpip {

namespace {

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined behaviour of std::uniform_real_distribution so
// batches reproduce bit for bit everywhere.
double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_polygon_params(std::size_t n, double circumradius, Point2 center) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidParameter,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  if (!std::isfinite(circumradius) || circumradius <= 0.0) {
    throw Error(ErrorCode::InvalidParameter, "circumradius must be positive and finite");
  }
  if (!is_finite(center)) {
    throw Error(ErrorCode::InvalidParameter, "center must be finite");
  }
}

}  // namespace

ConvexPolygon regular_polygon(std::size_t n, double circumradius, Point2 center) {
  check_polygon_params(n, circumradius, center);
  std::vector<Point2> vertices(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n) +
                         std::numbers::pi / 2.0;
    vertices[k] = {center.x + circumradius * std::cos(angle),
                   center.y + circumradius * std::sin(angle)};
  }
  return validate_polygon(std::move(vertices));
}

ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed,
                                    double circumradius, Point2 center) {
  check_polygon_params(n, circumradius, center);
  std::mt19937_64 rng(seed);
  // Points on a circle at sorted angles are convex by construction; redraw
  // when two angles come close enough to make a near-collinear triple.
  const double min_gap = 2.0 * std::numbers::pi / (20.0 * static_cast<double>(n));
  for (int attempt = 0; attempt < 1024; ++attempt) {
    std::vector<double> angles(n);
    for (double& a : angles) a = 2.0 * std::numbers::pi * unit_real(rng);
    std::sort(angles.begin(), angles.end());
    bool spaced = angles.front() + 2.0 * std::numbers::pi - angles.back() >= min_gap;
    for (std::size_t k = 1; spaced && k < n; ++k) {
      spaced = angles[k] - angles[k - 1] >= min_gap;
    }
    if (!spaced) continue;
    std::vector<Point2> vertices(n);
    for (std::size_t k = 0; k < n; ++k) {
      vertices[k] = {center.x + circumradius * std::cos(angles[k]),
                     center.y + circumradius * std::sin(angles[k])};
    }
    return validate_polygon(std::move(vertices));
  }
  throw Error(ErrorCode::InvalidParameter,
              "no well-spaced angle draw after 1024 attempts (n=" + std::to_string(n) + ")");
}

PointBatch sample_points(std::size_t count, const Box& box, std::uint64_t seed) {
  if (!box.valid()) {
    throw Error(ErrorCode::InvalidParameter, "sampling box is degenerate");
  }
  std::mt19937_64 rng(seed);
  PointBatch batch;
  batch.xs.resize(count);
  batch.ys.resize(count);
  const double w = box.width();
  const double h = box.height();
  for (std::size_t j = 0; j < count; ++j) {
    batch.xs[j] = box.min_x + w * unit_real(rng);
    batch.ys[j] = box.min_y + h * unit_real(rng);
  }
  return batch;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace vpip

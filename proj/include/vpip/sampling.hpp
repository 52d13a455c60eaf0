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

#include <cstdint>

#include "vpip/engines.hpp"
#include "vpip/geometry.hpp"

namespace vpip {

/// Regular n-gon on the circle of radius `circumradius` around `center`,
/// vertex k at angle 2*pi*k/n + pi/2, CCW. Throws InvalidParameter for
/// n < 3 or a non-positive radius.
ConvexPolygon regular_polygon(std::size_t n, double circumradius,
                              Point2 center = {});

/// Strictly convex n-gon with vertices on a circle at sorted random angles.
/// Deterministic for a fixed (n, seed, circumradius, center). Angle draws
/// with too small a gap are rejected and redrawn so validation never trips
/// on a near-collinear triple.
ConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed,
                                    double circumradius = 1.0,
                                    Point2 center = {});

/// `count` i.i.d. points uniform over `box`, from a seeded deterministic
/// generator: identical (count, box, seed) give bitwise identical batches.
/// Throws InvalidParameter when the box is degenerate.
PointBatch sample_points(std::size_t count, const Box& box, std::uint64_t seed);

/// Mixes a salt into a seed (splitmix64 finalizer); use to derive
/// independent per-task seeds from one user-facing seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace vpip

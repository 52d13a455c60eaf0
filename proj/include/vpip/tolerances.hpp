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

// Default numeric tolerances. Functions that apply one of these take it as a
// defaulted parameter, so callers with unusually scaled data can override.

namespace vpip::tol {

// Absolute threshold on the cross product of successive edge vectors. A
// vertex triple whose cross value is at or below this counts as collinear or
// reflex and polygon validation rejects it.
inline constexpr double kConvexityCross = 1e-12;

// Squared edge length at or below which an edge counts as zero-length.
inline constexpr double kDegenerateEdgeSq = 1e-24;

// reflect_generator rejects an inner point whose distance to the edge line is
// at or below this fraction of the edge length.
inline constexpr double kGeneratorCollision = 1e-12;

// Largest acceptable residual for the midpoint-on-edge and perpendicularity
// checks on a generator set.
inline constexpr double kGeneratorResidual = 1e-9;

// Points closer than this to an edge supporting line are skipped when the
// engines are cross-checked against each other.
inline constexpr double kAgreementBand = 1e-9;

}  // namespace vpip::tol

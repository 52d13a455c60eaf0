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
#include <iosfwd>
#include <string>
#include <vector>

#include "vpip/engines.hpp"
#include "vpip/geometry.hpp"
#include "vpip/voronoi.hpp"

// File formats.
//
// Polygon: JSON {"vertices": [[x, y], ...]} or headerless CSV with one
// "x,y" vertex per row; read_polygon_file sniffs the content.
//
// Generator set: JSON {"inner": [x, y], "outer": [[x, y], ...]}.
//
// Point batch: headerless "x,y" CSV, or binary with a 16-byte header
// (magic "PIPB", u32 version = 1, u64 count, all little-endian) followed by
// count interleaved float64 (x, y) pairs.
//
// Inclusion mask: CSV with one 0/1 per row, or binary with the same header
// convention (magic "PIPM") followed by the bits packed LSB-first into
// ceil(count / 8) bytes.

namespace vpip {

inline constexpr std::array<char, 4> kPointsMagic = {'P', 'I', 'P', 'B'};
inline constexpr std::array<char, 4> kMaskMagic = {'P', 'I', 'P', 'M'};
inline constexpr std::uint32_t kBinaryVersion = 1;

/// Whole file as a string; throws ParseError when unreadable.
std::string read_file(const std::string& path);

std::vector<Point2> read_polygon_file(const std::string& path);
std::vector<Point2> parse_polygon_json(const std::string& text);
std::vector<Point2> parse_polygon_csv(const std::string& text);

std::string generator_set_to_json(const GeneratorSet& generators);
GeneratorSet parse_generator_set_json(const std::string& text);

PointBatch read_points_file(const std::string& path);
PointBatch parse_points_csv(const std::string& text);
void write_points_csv(std::ostream& out, const PointBatch& points);
void write_points_binary(std::ostream& out, const PointBatch& points);
PointBatch read_points_binary(std::istream& in);

void write_mask_csv(std::ostream& out, const InclusionMask& mask);
void write_mask_binary(std::ostream& out, const InclusionMask& mask);
InclusionMask read_mask_csv(std::istream& in);
InclusionMask read_mask_binary(std::istream& in);

}  // namespace vpip

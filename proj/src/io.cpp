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

#include "vpip/io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "binary point/mask formats are little-endian");

namespace vpip {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFinite, "line " + std::to_string(line_no));
  }
  return value;
}

// Calls row(x, y, line_no) for every non-empty "x,y" line.
template <class Row>
void parse_xy_csv(const std::string& text, const Row& row) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    const std::string_view line = trim(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    const double x = parse_double(line.substr(0, comma), line_no);
    const double y = parse_double(line.substr(comma + 1), line_no);
    row(x, y, line_no);
  }
}

Point2 json_point(const json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    throw Error(ErrorCode::ParseError, "expected a [x, y] pair");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "invalid JSON");
  return j;
}

void write_exact(std::ostream& out, const void* data, std::size_t size) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

void read_exact(std::istream& in, void* data, std::size_t size, const char* what) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
  if (static_cast<std::size_t>(in.gcount()) != size) {
    throw Error(ErrorCode::ParseError, std::string("truncated ") + what);
  }
}

struct BinaryHeader {
  std::array<char, 4> magic;
  std::uint32_t version;
  std::uint64_t count;
};
static_assert(sizeof(BinaryHeader) == 16);

void write_header(std::ostream& out, std::array<char, 4> magic, std::uint64_t count) {
  const BinaryHeader header{magic, kBinaryVersion, count};
  write_exact(out, &header, sizeof(header));
}

std::uint64_t read_header(std::istream& in, std::array<char, 4> magic, const char* what) {
  BinaryHeader header{};
  read_exact(in, &header, sizeof(header), what);
  if (header.magic != magic) {
    throw Error(ErrorCode::ParseError, std::string("bad magic for ") + what);
  }
  if (header.version != kBinaryVersion) {
    throw Error(ErrorCode::ParseError,
                std::string(what) + ": unsupported version " + std::to_string(header.version));
  }
  return header.count;
}

void print_double(std::ostream& out, double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
  out.write(buf, len);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Point2> parse_polygon_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorCode::ParseError, "polygon JSON needs a 'vertices' array");
  }
  std::vector<Point2> vertices;
  vertices.reserve(j["vertices"].size());
  for (const json& node : j["vertices"]) vertices.push_back(json_point(node));
  return vertices;
}

std::vector<Point2> parse_polygon_csv(const std::string& text) {
  std::vector<Point2> vertices;
  parse_xy_csv(text, [&](double x, double y, std::size_t) { vertices.push_back({x, y}); });
  return vertices;
}

std::vector<Point2> read_polygon_file(const std::string& path) {
  const std::string text = read_file(path);
  const std::string_view body = trim(std::string_view(text));
  if (!body.empty() && body.front() == '{') return parse_polygon_json(text);
  return parse_polygon_csv(text);
}

std::string generator_set_to_json(const GeneratorSet& generators) {
  json j;
  j["inner"] = {generators.inner.x, generators.inner.y};
  j["outer"] = json::array();
  for (const Point2& p : generators.outer) j["outer"].push_back({p.x, p.y});
  return j.dump(2) + "\n";
}

GeneratorSet parse_generator_set_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("inner") || !j.contains("outer") ||
      !j["outer"].is_array()) {
    throw Error(ErrorCode::ParseError, "generator JSON needs 'inner' and 'outer'");
  }
  GeneratorSet generators;
  generators.inner = json_point(j["inner"]);
  generators.outer.reserve(j["outer"].size());
  for (const json& node : j["outer"]) generators.outer.push_back(json_point(node));
  return generators;
}

PointBatch parse_points_csv(const std::string& text) {
  PointBatch batch;
  parse_xy_csv(text, [&](double x, double y, std::size_t) { batch.push_back({x, y}); });
  return batch;
}

PointBatch read_points_file(const std::string& path) {
  const std::string text = read_file(path);
  if (text.size() >= kPointsMagic.size() &&
      std::memcmp(text.data(), kPointsMagic.data(), kPointsMagic.size()) == 0) {
    std::istringstream stream(text);
    return read_points_binary(stream);
  }
  return parse_points_csv(text);
}

void write_points_csv(std::ostream& out, const PointBatch& points) {
  for (std::size_t j = 0; j < points.size(); ++j) {
    print_double(out, points.xs[j]);
    out.put(',');
    print_double(out, points.ys[j]);
    out.put('\n');
  }
}

void write_points_binary(std::ostream& out, const PointBatch& points) {
  write_header(out, kPointsMagic, points.size());
  std::vector<double> interleaved(2 * points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    interleaved[2 * j] = points.xs[j];
    interleaved[2 * j + 1] = points.ys[j];
  }
  write_exact(out, interleaved.data(), interleaved.size() * sizeof(double));
}

PointBatch read_points_binary(std::istream& in) {
  const std::uint64_t count = read_header(in, kPointsMagic, "point stream");
  std::vector<double> interleaved(2 * count);
  read_exact(in, interleaved.data(), interleaved.size() * sizeof(double), "point stream");
  PointBatch batch;
  batch.xs.resize(count);
  batch.ys.resize(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    batch.xs[j] = interleaved[2 * j];
    batch.ys[j] = interleaved[2 * j + 1];
    if (!is_finite(batch.at(j))) {
      throw Error(ErrorCode::NonFinite, "point " + std::to_string(j));
    }
  }
  return batch;
}

void write_mask_csv(std::ostream& out, const InclusionMask& mask) {
  for (const std::uint8_t bit : mask) {
    out.put(bit ? '1' : '0');
    out.put('\n');
  }
}

InclusionMask read_mask_csv(std::istream& in) {
  InclusionMask mask;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body == "0") {
      mask.push_back(0);
    } else if (body == "1") {
      mask.push_back(1);
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 0 or 1");
    }
  }
  return mask;
}

void write_mask_binary(std::ostream& out, const InclusionMask& mask) {
  write_header(out, kMaskMagic, mask.size());
  std::vector<std::uint8_t> packed((mask.size() + 7) / 8, 0);
  for (std::size_t j = 0; j < mask.size(); ++j) {
    packed[j / 8] |= static_cast<std::uint8_t>((mask[j] & 1u) << (j % 8));
  }
  write_exact(out, packed.data(), packed.size());
}

InclusionMask read_mask_binary(std::istream& in) {
  const std::uint64_t count = read_header(in, kMaskMagic, "mask stream");
  std::vector<std::uint8_t> packed((count + 7) / 8);
  read_exact(in, packed.data(), packed.size(), "mask stream");
  InclusionMask mask(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    mask[j] = (packed[j / 8] >> (j % 8)) & 1u;
  }
  return mask;
}

}  // namespace vpip

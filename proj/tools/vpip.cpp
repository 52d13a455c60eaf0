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

// vpip -- point-in-convex-polygon engines and benchmark harness.
//
// Subcommands:
//   convert   polygon file -> generator set JSON
//   test      batch point-inclusion queries with a chosen engine
//   validate  cross-check the three engines on sampled points
//   bench     throughput benchmark, CSV output
//
// Exit codes: 0 success / validation pass, 1 validation fail, 2 input error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vpip/bench.hpp"
#include "vpip/engines.hpp"
#include "vpip/geometry.hpp"
#include "vpip/io.hpp"
#include "vpip/sampling.hpp"
#include "vpip/voronoi.hpp"

namespace {

using namespace vpip;

// "3..15", "7" or "3,5,9"
std::vector<int> parse_edge_spec(const std::string& spec) {
  std::vector<int> counts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string token = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (token.empty()) continue;
    const std::size_t dots = token.find("..");
    const auto parse_int = [&](const std::string& s) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::InvalidParameter, "bad edge count '" + s + "'");
      }
      return value;
    };
    if (dots == std::string::npos) {
      counts.push_back(parse_int(token));
    } else {
      const int lo = parse_int(token.substr(0, dots));
      const int hi = parse_int(token.substr(dots + 2));
      if (hi < lo) {
        throw Error(ErrorCode::InvalidParameter, "empty edge range '" + token + "'");
      }
      for (int n = lo; n <= hi; ++n) counts.push_back(n);
    }
  }
  return counts;
}

std::vector<EngineKind> parse_engine_list(const std::string& spec) {
  std::vector<EngineKind> engines;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string token = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (token.empty()) continue;
    const std::optional<EngineKind> kind = parse_engine(token);
    if (!kind) throw Error(ErrorCode::InvalidParameter, "unknown engine '" + token + "'");
    engines.push_back(*kind);
  }
  return engines;
}

void write_text_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << body;
}

int cmd_convert(const std::string& polygon_path, const std::string& out_path) {
  const ConvexPolygon polygon = validate_polygon(read_polygon_file(polygon_path));
  if (polygon.was_reversed()) {
    std::cerr << "note: input was clockwise, reversed to counter-clockwise\n";
  }
  write_text_output(out_path, generator_set_to_json(to_voronoi(polygon)));
  return 0;
}

int cmd_test(const std::string& polygon_path, const std::string& points_path,
             EngineKind engine, const std::string& format, const std::string& out_path) {
  const std::vector<Point2> vertices = read_polygon_file(polygon_path);
  const PointBatch points = read_points_file(points_path);

  InclusionMask mask;
  if (engine == EngineKind::RayCrossing) {
    // the crossing engine handles any simple polygon; skip the convexity check
    if (vertices.size() < 3) {
      throw Error(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");
    }
    for (const Point2& v : vertices) {
      if (!is_finite(v)) throw Error(ErrorCode::NonFinite, "polygon vertex");
    }
    mask = ray_crossing_contains_batch(vertices, points);
  } else {
    const ConvexPolygon polygon = validate_polygon(vertices);
    mask = engine == EngineKind::Voronoi
               ? voronoi_contains_batch(to_voronoi(polygon), points)
               : sign_of_offset_contains_batch(polygon, points);
  }

  const auto write_mask = [&](std::ostream& out) {
    if (format == "binary") {
      write_mask_binary(out, mask);
    } else {
      write_mask_csv(out, mask);
    }
  };
  if (out_path.empty()) {
    write_mask(std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
    write_mask(out);
  }
  std::cerr << count_inside(mask) << " of " << mask.size() << " points inside\n";
  return 0;
}

int cmd_validate(const std::string& polygon_path, const std::string& points_path,
                 std::size_t count, std::uint64_t seed) {
  const ConvexPolygon polygon = validate_polygon(read_polygon_file(polygon_path));
  const PointBatch points =
      points_path.empty()
          ? sample_points(count, bounding_box(polygon.vertices()).scaled(2.0), seed)
          : read_points_file(points_path);
  const ValidationReport report = run_validation(polygon, points);
  print_validation_report(std::cout, report);
  return report.pass ? 0 : 1;
}

int cmd_bench(const BenchConfig& cfg, const std::string& out_path) {
  const std::vector<BenchRecord> records = run_benchmark(cfg);

  if (out_path.empty()) {
    write_bench_csv(std::cout, records);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
    write_bench_csv(out, records);
  }

  // median summary per engine and edge count
  std::map<std::pair<EngineKind, int>, std::vector<double>> times;
  for (const BenchRecord& r : records) {
    if (r.phase == BenchPhase::Query) {
      times[{r.engine, r.n_edges}].push_back(static_cast<double>(r.wall_time_ns));
    }
  }
  std::cerr << "engine          n   median ms   median pts/s\n";
  char buf[128];
  for (const auto& [key, samples] : times) {
    const double ms = median(samples) * 1e-6;
    const double pts = static_cast<double>(cfg.batch_size) / (ms * 1e-3);
    std::snprintf(buf, sizeof(buf), "%-14s %3d   %9.3f   %.4g\n",
                  std::string(engine_name(key.first)).c_str(), key.second, ms, pts);
    std::cerr << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-in-convex-polygon engines (nearest-generator method)"};
  app.require_subcommand(1);

  std::string polygon_path;
  std::string points_path;
  std::string out_path;
  std::string format = "csv";
  EngineKind engine = EngineKind::Voronoi;
  std::size_t sample_count = 100'000;
  std::uint64_t seed = 42;
  std::string edge_spec = "3..15";
  std::string engine_spec = "voronoi,sign_of_offset,ray_crossing";
  BenchConfig bench_cfg;

  CLI::App* convert = app.add_subcommand("convert", "polygon file -> generator set JSON");
  convert->add_option("--polygon", polygon_path, "polygon JSON or CSV file")->required();
  convert->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* test = app.add_subcommand("test", "batch point-inclusion queries");
  test->add_option("--polygon", polygon_path, "polygon JSON or CSV file")->required();
  test->add_option("--points", points_path, "points CSV or binary file")->required();
  const std::map<std::string, EngineKind> engine_map = {
      {"voronoi", EngineKind::Voronoi},
      {"offset", EngineKind::SignOfOffset},
      {"crossing", EngineKind::RayCrossing}};
  test->add_option("--engine", engine, "inclusion engine")
      ->required()
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  test->add_option("--format", format, "mask output format (default csv)")
      ->check(CLI::IsMember({"csv", "binary"}));
  test->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* validate = app.add_subcommand("validate", "cross-check the three engines");
  validate->add_option("--polygon", polygon_path, "polygon JSON or CSV file")->required();
  validate->add_option("--points", points_path, "points file (default: sampled)");
  validate->add_option("--count", sample_count, "sampled point count (default 100000)");
  validate->add_option("--seed", seed, "sampling seed (default 42)");

  CLI::App* bench = app.add_subcommand("bench", "throughput benchmark, CSV output");
  bench->add_option("--edges", edge_spec, "edge counts, e.g. 3..15 or 3,5,9");
  bench->add_option("--batch", bench_cfg.batch_size, "points per batch (default 1000000)");
  bench->add_option("--reps", bench_cfg.repetitions, "timed repetitions (default 10)");
  bench->add_option("--seed", bench_cfg.seed, "sampling seed (default 42)");
  bench->add_option("--engines", engine_spec, "comma-separated engine list");
  bench->add_option("--threads", bench_cfg.threads, "batch kernel threads (default 1)");
  bench->add_option("--out", out_path, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (convert->parsed()) return cmd_convert(polygon_path, out_path);
    if (test->parsed()) return cmd_test(polygon_path, points_path, engine, format, out_path);
    if (validate->parsed()) return cmd_validate(polygon_path, points_path, sample_count, seed);
    if (bench->parsed()) {
      bench_cfg.edge_counts = parse_edge_spec(edge_spec);
      bench_cfg.engines = parse_engine_list(engine_spec);
      return cmd_bench(bench_cfg, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vpip/engines.hpp"
#include "vpip/geometry.hpp"
#include "vpip/voronoi.hpp"

namespace vpip {

// ---------------------------------------------------------------------------
// Throughput benchmark.

struct BenchConfig {
  static std::vector<int> default_edge_counts();  // 3 through 15

  std::vector<int> edge_counts = default_edge_counts();
  std::size_t batch_size = 1'000'000;
  int repetitions = 10;
  std::uint64_t seed = 42;
  /// Query sampling box; defaults to the polygon bounding box scaled 2x.
  std::optional<Box> sample_box;
  std::vector<EngineKind> engines{kAllEngines.begin(), kAllEngines.end()};
  int threads = 1;
};

enum class BenchPhase { Convert, Query };

std::string_view phase_name(BenchPhase phase);
std::optional<BenchPhase> parse_phase(std::string_view name);

struct BenchRecord {
  EngineKind engine = EngineKind::Voronoi;
  int n_edges = 0;
  std::uint64_t batch_size = 0;  // 0 on convert records
  int repetition = 0;
  BenchPhase phase = BenchPhase::Query;
  std::uint64_t wall_time_ns = 0;
  double throughput_pts_per_s = 0.0;  // batch_size / wall seconds

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// For each configured engine and edge count: builds a regular n-gon, samples
/// one point batch (seed mixed with n), converts once for the Voronoi engine
/// (emitting a Convert record), runs one discarded warm-up pass, then emits
/// one Query record per repetition. Timed regions cover only the batch kernel
/// or the conversion; an engine failure drops that engine's records and the
/// remaining engines still run. Throws InvalidParameter on a bad config.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

/// CSV with header
/// engine,n_edges,batch_size,repetition,phase,wall_time_ns,throughput_pts_per_s
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

/// Median of `values`; the headline statistic for repeated timings. Throws
/// InvalidParameter on an empty input.
double median(std::vector<double> values);

// ---------------------------------------------------------------------------
// Engine cross-validation.

struct Disagreement {
  std::size_t index = 0;
  Point2 point;
  double edge_line_dist = 0.0;
  bool voronoi = false;
  bool sign_of_offset = false;
  bool ray_crossing = false;
};

struct ValidationReport {
  std::size_t point_count = 0;
  /// Pairwise mismatch counts: {voronoi/offset, voronoi/crossing, offset/crossing}.
  std::array<std::size_t, 3> pair_disagreements{};
  std::size_t disagreeing_points = 0;
  std::vector<Disagreement> samples;  // first kMaxSamples disagreements
  bool pass = false;

  static constexpr std::size_t kMaxSamples = 100;
};

/// Runs all three engines on the same batch and compares the masks point by
/// point. Passes iff every disagreeing point lies within `band` of some edge
/// supporting line; the verdict depends only on the set of disagreeing
/// points, not on engine order.
ValidationReport run_validation(const ConvexPolygon& polygon,
                                const GeneratorSet& generators,
                                const PointBatch& points, int threads = 1,
                                double band = tol::kAgreementBand);

/// Same, with the generator set built from the polygon.
ValidationReport run_validation(const ConvexPolygon& polygon,
                                const PointBatch& points, int threads = 1,
                                double band = tol::kAgreementBand);

void print_validation_report(std::ostream& out, const ValidationReport& report);

}  // namespace vpip

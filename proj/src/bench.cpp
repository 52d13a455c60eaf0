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

#include "vpip/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include "vpip/sampling.hpp"
#include "vpip/voronoi.hpp"

namespace vpip {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point begin, Clock::time_point end) {
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
  // clamp so throughput never divides by zero on a sub-tick kernel
  return static_cast<std::uint64_t>(std::max<long long>(ns, 1));
}

double throughput(std::uint64_t batch_size, std::uint64_t wall_time_ns) {
  return static_cast<double>(batch_size) / (static_cast<double>(wall_time_ns) * 1e-9);
}

void check_config(const BenchConfig& cfg) {
  if (cfg.edge_counts.empty()) {
    throw Error(ErrorCode::InvalidParameter, "no edge counts configured");
  }
  for (const int n : cfg.edge_counts) {
    if (n < 3) {
      throw Error(ErrorCode::InvalidParameter,
                  "edge count " + std::to_string(n) + " is below 3");
    }
  }
  if (cfg.batch_size < 1) throw Error(ErrorCode::InvalidParameter, "batch size must be >= 1");
  if (cfg.repetitions < 1) {
    throw Error(ErrorCode::InvalidParameter, "repetitions must be >= 1");
  }
  if (cfg.threads < 1) throw Error(ErrorCode::InvalidParameter, "threads must be >= 1");
  if (cfg.engines.empty()) throw Error(ErrorCode::InvalidParameter, "no engines configured");
  if (cfg.sample_box && !cfg.sample_box->valid()) {
    throw Error(ErrorCode::InvalidParameter, "sample box is degenerate");
  }
}

// keeps the optimizer from dropping the masks the timed kernels produce
volatile std::uint64_t g_bench_sink = 0;

std::string_view next_field(std::string_view& line, std::size_t line_no) {
  if (line.empty()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing field");
  }
  const std::size_t comma = line.find(',');
  const std::string_view field = line.substr(0, comma);
  line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
  return field;
}

template <class T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> BenchConfig::default_edge_counts() {
  std::vector<int> counts(13);
  std::iota(counts.begin(), counts.end(), 3);
  return counts;
}

std::string_view phase_name(BenchPhase phase) {
  switch (phase) {
    case BenchPhase::Convert: return "convert";
    case BenchPhase::Query: return "query";
  }
  return "unknown";
}

std::optional<BenchPhase> parse_phase(std::string_view name) {
  if (name == "convert") return BenchPhase::Convert;
  if (name == "query") return BenchPhase::Query;
  return std::nullopt;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  check_config(cfg);
  std::uint64_t sink = 0;

  // One polygon and one pre-sampled batch per edge count, shared by all
  // engines so every engine answers exactly the same queries.
  struct Workload {
    ConvexPolygon polygon;
    PointBatch batch;
  };
  std::vector<Workload> workloads;
  workloads.reserve(cfg.edge_counts.size());
  for (const int n : cfg.edge_counts) {
    ConvexPolygon polygon = regular_polygon(static_cast<std::size_t>(n), 1.0);
    const Box box =
        cfg.sample_box ? *cfg.sample_box : bounding_box(polygon.vertices()).scaled(2.0);
    PointBatch batch =
        sample_points(cfg.batch_size, box, mix_seed(cfg.seed, static_cast<std::uint64_t>(n)));
    workloads.push_back({std::move(polygon), std::move(batch)});
  }

  struct PairResult {
    std::optional<BenchRecord> convert;
    std::vector<BenchRecord> queries;
    GeneratorSet generators;
  };
  std::vector<std::vector<PairResult>> results(
      cfg.engines.size(), std::vector<PairResult>(cfg.edge_counts.size()));

  const auto run_once = [&](EngineKind engine, const Workload& w,
                            const GeneratorSet& generators) -> InclusionMask {
    switch (engine) {
      case EngineKind::Voronoi:
        return voronoi_contains_batch(generators, w.batch, cfg.threads);
      case EngineKind::SignOfOffset:
        return sign_of_offset_contains_batch(w.polygon, w.batch, cfg.threads);
      case EngineKind::RayCrossing:
        return ray_crossing_contains_batch(w.polygon.vertices(), w.batch, cfg.threads);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown engine");
  };

  // Conversion (timed, once, voronoi only) and one discarded warm-up pass
  // per (engine, n) pair.
  std::vector<bool> engine_failed(cfg.engines.size(), false);
  for (std::size_t e = 0; e < cfg.engines.size(); ++e) {
    const EngineKind engine = cfg.engines[e];
    try {
      for (std::size_t i = 0; i < cfg.edge_counts.size(); ++i) {
        PairResult& pair = results[e][i];
        if (engine == EngineKind::Voronoi) {
          const auto t0 = Clock::now();
          pair.generators = to_voronoi(workloads[i].polygon);
          const auto t1 = Clock::now();
          pair.convert = BenchRecord{engine, cfg.edge_counts[i], 0, 0, BenchPhase::Convert,
                                     elapsed_ns(t0, t1), 0.0};
        }
        sink += count_inside(run_once(engine, workloads[i], pair.generators));
      }
    } catch (const Error&) {
      engine_failed[e] = true;
    }
  }

  // Timed repetitions, interleaved over the (engine, n) pairs in a fresh
  // random order each round, so a transient system slowdown lands on isolated
  // repetitions of scattered pairs instead of on every repetition of one pair
  // (or, if the disturbance is periodic, on the same pairs each round);
  // medians stay comparable across n.
  std::vector<std::pair<std::size_t, std::size_t>> order;
  order.reserve(cfg.engines.size() * cfg.edge_counts.size());
  for (std::size_t e = 0; e < cfg.engines.size(); ++e) {
    for (std::size_t i = 0; i < cfg.edge_counts.size(); ++i) order.emplace_back(e, i);
  }
  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    std::mt19937_64 order_rng(mix_seed(cfg.seed, 0x0bef0000u + static_cast<unsigned>(rep)));
    std::shuffle(order.begin(), order.end(), order_rng);
    for (const auto& [e, i] : order) {
      if (engine_failed[e]) continue;
      const EngineKind engine = cfg.engines[e];
      try {
        const auto t0 = Clock::now();
        const InclusionMask mask = run_once(engine, workloads[i], results[e][i].generators);
        const auto t1 = Clock::now();
        const std::uint64_t ns = elapsed_ns(t0, t1);
        results[e][i].queries.push_back({engine, cfg.edge_counts[i], cfg.batch_size, rep,
                                         BenchPhase::Query, ns,
                                         throughput(cfg.batch_size, ns)});
        sink += count_inside(mask);
      } catch (const Error&) {
        engine_failed[e] = true;
      }
    }
  }

  // Emit in canonical (engine, n, repetition) order; a failed engine
  // contributes nothing, the other engines keep their records.
  std::vector<BenchRecord> records;
  for (std::size_t e = 0; e < cfg.engines.size(); ++e) {
    if (engine_failed[e]) continue;
    for (std::size_t i = 0; i < cfg.edge_counts.size(); ++i) {
      if (results[e][i].convert) records.push_back(*results[e][i].convert);
      for (const BenchRecord& r : results[e][i].queries) records.push_back(r);
    }
  }
  g_bench_sink = sink;
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "engine,n_edges,batch_size,repetition,phase,wall_time_ns,throughput_pts_per_s\n";
  char buf[64];
  for (const BenchRecord& r : records) {
    out << engine_name(r.engine) << ',' << r.n_edges << ',' << r.batch_size << ','
        << r.repetition << ',' << phase_name(r.phase) << ',' << r.wall_time_ns << ',';
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", r.throughput_pts_per_s);
    out.write(buf, len);
    out.put('\n');
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line.rfind("engine,", 0) != 0) {
        throw Error(ErrorCode::ParseError, "missing CSV header");
      }
      saw_header = true;
      continue;
    }
    std::string_view rest(line);
    BenchRecord r;
    const auto engine = parse_engine(next_field(rest, line_no));
    if (!engine) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad engine");
    r.engine = *engine;
    r.n_edges = parse_number<int>(next_field(rest, line_no), line_no);
    r.batch_size = parse_number<std::uint64_t>(next_field(rest, line_no), line_no);
    r.repetition = parse_number<int>(next_field(rest, line_no), line_no);
    const auto phase = parse_phase(next_field(rest, line_no));
    if (!phase) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad phase");
    r.phase = *phase;
    r.wall_time_ns = parse_number<std::uint64_t>(next_field(rest, line_no), line_no);
    r.throughput_pts_per_s = parse_number<double>(next_field(rest, line_no), line_no);
    records.push_back(r);
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::InvalidParameter, "median of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

ValidationReport run_validation(const ConvexPolygon& polygon,
                                const GeneratorSet& generators, const PointBatch& points,
                                int threads, double band) {
  ValidationReport report;
  report.point_count = points.size();

  const InclusionMask voronoi = voronoi_contains_batch(generators, points, threads);
  const InclusionMask offset = sign_of_offset_contains_batch(polygon, points, threads);
  const InclusionMask crossing =
      ray_crossing_contains_batch(polygon.vertices(), points, threads);

  report.pass = true;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const bool v = voronoi[j] != 0;
    const bool s = offset[j] != 0;
    const bool c = crossing[j] != 0;
    report.pair_disagreements[0] += (v != s);
    report.pair_disagreements[1] += (v != c);
    report.pair_disagreements[2] += (s != c);
    if (v == s && v == c) continue;

    ++report.disagreeing_points;
    const double dist = edge_line_distance(polygon, points.at(j));
    if (dist > band) report.pass = false;
    if (report.samples.size() < ValidationReport::kMaxSamples) {
      report.samples.push_back({j, points.at(j), dist, v, s, c});
    }
  }
  return report;
}

ValidationReport run_validation(const ConvexPolygon& polygon, const PointBatch& points,
                                int threads, double band) {
  return run_validation(polygon, to_voronoi(polygon), points, threads, band);
}

void print_validation_report(std::ostream& out, const ValidationReport& report) {
  out << "points tested:        " << report.point_count << "\n";
  out << "voronoi vs offset:    " << report.point_count - report.pair_disagreements[0]
      << " agree, " << report.pair_disagreements[0] << " differ\n";
  out << "voronoi vs crossing:  " << report.point_count - report.pair_disagreements[1]
      << " agree, " << report.pair_disagreements[1] << " differ\n";
  out << "offset vs crossing:   " << report.point_count - report.pair_disagreements[2]
      << " agree, " << report.pair_disagreements[2] << " differ\n";
  out << "disagreeing points:   " << report.disagreeing_points << "\n";
  if (!report.samples.empty()) {
    out << "first " << report.samples.size() << " disagreements (v/o/c, distance to nearest edge line):\n";
    char buf[160];
    for (const Disagreement& d : report.samples) {
      std::snprintf(buf, sizeof(buf), "  #%zu (%.17g, %.17g) %d/%d/%d dist=%.3g\n", d.index,
                    d.point.x, d.point.y, d.voronoi ? 1 : 0, d.sign_of_offset ? 1 : 0,
                    d.ray_crossing ? 1 : 0, d.edge_line_dist);
      out << buf;
    }
  }
  out << "verdict:              " << (report.pass ? "PASS" : "FAIL");
  if (report.pass && report.disagreeing_points > 0) {
    out << " (all disagreements within the boundary band)";
  }
  out << "\n";
}

}  // namespace vpip

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

#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "support/oracles.hpp"
#include "vpip/engines.hpp"
#include "vpip/geometry.hpp"
#include "vpip/sampling.hpp"
#include "vpip/voronoi.hpp"

using namespace vpip;

namespace {

ConvexPolygon unit_square() { return validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ConvexPolygon make_test_polygon(std::uint64_t i) {
  const std::size_t n = 3 + static_cast<std::size_t>(mix_seed(21, i) % 13);
  const double radius = 0.5 + 2.0 * static_cast<double>(mix_seed(22, i) % 100) / 100.0;
  const Point2 center = {static_cast<double>(mix_seed(23, i) % 7) - 3.0,
                         static_cast<double>(mix_seed(24, i) % 7) - 3.0};
  return random_convex_polygon(n, mix_seed(25, i), radius, center);
}

PointBatch sample_around(const ConvexPolygon& poly, std::size_t count, std::uint64_t seed) {
  return sample_points(count, bounding_box(poly.vertices()).scaled(2.0), seed);
}

}  // namespace

TEST_SUITE("engines") {

TEST_CASE("voronoi scalar test on the unit square") {
  const GeneratorSet g = to_voronoi(unit_square());
  CHECK(voronoi_contains(g, {0.5, 0.5}));
  // squared distances: 4.5 to the inner generator, 2.5 to (1.5, 0.5)
  CHECK_FALSE(voronoi_contains(g, {2, 2}));
  // boundary point equidistant to inner and (1.5, 0.5)
  CHECK(voronoi_contains(g, {1, 0.5}));
}

TEST_CASE("sign-of-offset scalar test on the unit square") {
  const ConvexPolygon square = unit_square();
  CHECK(sign_of_offset_contains(square, {0.5, 0.5}));
  CHECK_FALSE(sign_of_offset_contains(square, {2, 2}));
  CHECK(sign_of_offset_contains(square, {1, 0.5}));
}

TEST_CASE("ray-crossing scalar test on the unit square") {
  const ConvexPolygon square = unit_square();
  CHECK(ray_crossing_contains(square.vertices(), {0.5, 0.5}));
  CHECK(ray_crossing_count(square.vertices(), {0.5, 0.5}) == 1);
  CHECK_FALSE(ray_crossing_contains(square.vertices(), {2, 0.5}));
  CHECK(ray_crossing_count(square.vertices(), {2, 0.5}) == 0);
}

TEST_CASE("ray crossing handles a concave polygon") {
  const std::vector<Point2> arrow = {{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}};
  // (2,2) sits in the notch: the +x ray crosses the two right-hand edges
  CHECK(ray_crossing_count(arrow, {2, 2}) == 2);
  CHECK_FALSE(ray_crossing_contains(arrow, {2, 2}));
  CHECK(ray_crossing_contains(arrow, {1, 1}));
  CHECK(ray_crossing_contains(arrow, {3, 1}));
  CHECK_FALSE(ray_crossing_contains(arrow, {-1, 1}));
}

TEST_CASE("empty batches give empty masks") {
  const ConvexPolygon square = unit_square();
  const GeneratorSet g = to_voronoi(square);
  const PointBatch none;
  CHECK(voronoi_contains_batch(g, none).empty());
  CHECK(sign_of_offset_contains_batch(square, none).empty());
  CHECK(ray_crossing_contains_batch(square.vertices(), none).empty());
}

TEST_CASE("polygon vertices and edge midpoints are inside under all engines") {
  const ConvexPolygon square = unit_square();
  const GeneratorSet g = to_voronoi(square);
  PointBatch pts;
  for (std::size_t k = 0; k < square.size(); ++k) {
    const Point2 a = square.vertex(k);
    const Point2 b = square.vertex((k + 1) % square.size());
    pts.push_back(a);
    pts.push_back(0.5 * (a + b));
  }
  const InclusionMask expected(pts.size(), 1);
  CHECK(voronoi_contains_batch(g, pts) == expected);
  CHECK(sign_of_offset_contains_batch(square, pts) == expected);
  CHECK(ray_crossing_contains_batch(square.vertices(), pts) == expected);
}

TEST_CASE("batch kernels match the scalar engines point by point") {
  for (std::uint64_t i = 0; i < 8; ++i) {
    const ConvexPolygon poly = make_test_polygon(i);
    const GeneratorSet g = to_voronoi(poly);
    const PointBatch pts = sample_around(poly, 10'000, mix_seed(31, i));

    InclusionMask scalar_voronoi(pts.size());
    InclusionMask scalar_offset(pts.size());
    InclusionMask scalar_ray(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      scalar_voronoi[j] = voronoi_contains(g, pts.at(j));
      scalar_offset[j] = sign_of_offset_contains(poly, pts.at(j));
      scalar_ray[j] = ray_crossing_contains(poly.vertices(), pts.at(j));
    }
    CHECK(voronoi_contains_batch(g, pts) == scalar_voronoi);
    CHECK(sign_of_offset_contains_batch(poly, pts) == scalar_offset);
    CHECK(ray_crossing_contains_batch(poly.vertices(), pts) == scalar_ray);
  }
}

TEST_CASE("batch results match the scalar examples") {
  const ConvexPolygon square = unit_square();
  PointBatch pts;
  pts.push_back({0.5, 0.5});
  pts.push_back({2, 2});
  const InclusionMask expected = {1, 0};
  CHECK(voronoi_contains_batch(to_voronoi(square), pts) == expected);
  CHECK(sign_of_offset_contains_batch(square, pts) == expected);
  CHECK(ray_crossing_contains_batch(square.vertices(), pts) == expected);
}

TEST_CASE("voronoi and sign-of-offset agree on a uniform batch over the unit square") {
  const ConvexPolygon square = unit_square();
  const GeneratorSet g = to_voronoi(square);
  const PointBatch pts = sample_points(10'000, {-1, -1, 2, 2}, 4242);
  CHECK(voronoi_contains_batch(g, pts) == sign_of_offset_contains_batch(square, pts));
}

TEST_CASE("all three engines agree away from the edge lines") {
  for (std::uint64_t i = 0; i < 12; ++i) {
    const ConvexPolygon poly = make_test_polygon(i);
    const GeneratorSet g = to_voronoi(poly);
    const PointBatch pts = sample_around(poly, 20'000, mix_seed(32, i));
    const InclusionMask mv = voronoi_contains_batch(g, pts);
    const InclusionMask ms = sign_of_offset_contains_batch(poly, pts);
    const InclusionMask mr = ray_crossing_contains_batch(poly.vertices(), pts);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (edge_line_distance(poly, pts.at(j)) <= tol::kAgreementBand) continue;
      CHECK(mv[j] == ms[j]);
      CHECK(mv[j] == mr[j]);
    }
  }
}

TEST_CASE("squared and sqrt distance paths produce identical masks") {
  for (std::uint64_t i = 0; i < 6; ++i) {
    const ConvexPolygon poly = make_test_polygon(i);
    const GeneratorSet g = to_voronoi(poly);
    const PointBatch pts = sample_around(poly, 20'000, mix_seed(33, i));
    CHECK(voronoi_contains_batch(g, pts) == voronoi_contains_batch_sqrt(g, pts));
  }
}

TEST_CASE("squared-distance table layout and argmin behaviour") {
  const ConvexPolygon poly = make_test_polygon(3);
  const GeneratorSet g = to_voronoi(poly);
  const PointBatch pts = sample_around(poly, 2'000, 99);
  const SquaredDistanceTable table = squared_distance_table(g, pts);
  REQUIRE(table.rows == g.edge_count() + 1);
  REQUIRE(table.cols == pts.size());

  for (std::size_t j = 0; j < pts.size(); ++j) {
    CHECK(table.at(0, j) == squared_distance(pts.at(j), g.inner));
    for (std::size_t r = 0; r < table.rows; ++r) CHECK(table.at(r, j) >= 0.0);

    if (edge_line_distance(poly, pts.at(j)) <= tol::kAgreementBand) continue;
    const bool inside = sign_of_offset_contains(poly, pts.at(j));
    bool outer_beats_inner = false;
    for (std::size_t r = 1; r < table.rows; ++r) {
      if (inside) {
        CHECK(table.at(0, j) < table.at(r, j));
      } else if (table.at(r, j) < table.at(0, j)) {
        outer_beats_inner = true;
      }
    }
    if (!inside) CHECK(outer_beats_inner);
  }
}

TEST_CASE("instrumented voronoi kernel reports the exact work count") {
  const struct {
    std::size_t n;
    std::size_t m;
  } cases[] = {{3, 1'000}, {15, 10'000}};
  for (const auto& c : cases) {
    const ConvexPolygon poly = regular_polygon(c.n, 1.0);
    const GeneratorSet g = to_voronoi(poly);
    const PointBatch pts = sample_around(poly, c.m, 7);
    BatchStats stats;
    const InclusionMask counted = voronoi_contains_batch(g, pts, stats);
    CHECK(stats.distance_evaluations == (c.n + 1) * c.m);
    CHECK(stats.comparisons == c.n * c.m);
    CHECK(counted == voronoi_contains_batch(g, pts));
  }
}

TEST_CASE("ray crossing counts on convex polygons stay at or below two") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const ConvexPolygon poly = make_test_polygon(i);
    const PointBatch pts = sample_around(poly, 2'000, mix_seed(34, i));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const int crossings = ray_crossing_count(poly.vertices(), pts.at(j));
      CHECK(crossings <= 2);
      if (edge_line_distance(poly, pts.at(j)) <= tol::kAgreementBand) continue;
      CHECK((crossings % 2 == 1) == sign_of_offset_contains(poly, pts.at(j)));
    }
  }
}

TEST_CASE("masks do not depend on the thread count") {
  const ConvexPolygon poly = make_test_polygon(5);
  const GeneratorSet g = to_voronoi(poly);
  const PointBatch pts = sample_around(poly, 100'000, 4711);
  for (int threads : {2, 3, 4, 13}) {
    CHECK(voronoi_contains_batch(g, pts, threads) == voronoi_contains_batch(g, pts, 1));
    CHECK(sign_of_offset_contains_batch(poly, pts, threads) ==
          sign_of_offset_contains_batch(poly, pts, 1));
    CHECK(ray_crossing_contains_batch(poly.vertices(), pts, threads) ==
          ray_crossing_contains_batch(poly.vertices(), pts, 1));
  }
  BatchStats stats;
  voronoi_contains_batch(g, pts, stats, 4);
  CHECK(stats.distance_evaluations == (g.edge_count() + 1) * pts.size());
}

TEST_CASE("one generator set serves concurrent queries") {
  const ConvexPolygon poly = make_test_polygon(6);
  const GeneratorSet g = to_voronoi(poly);
  const PointBatch pts = sample_around(poly, 50'000, 555);
  const InclusionMask expected = voronoi_contains_batch(g, pts);

  std::vector<InclusionMask> results(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
      workers.emplace_back([&, t] { results[t] = voronoi_contains_batch(g, pts); });
    }
  }
  for (const InclusionMask& r : results) CHECK(r == expected);
}

TEST_CASE("engine names parse back to their kinds") {
  for (EngineKind kind : kAllEngines) {
    CHECK(parse_engine(engine_name(kind)) == kind);
  }
  CHECK(parse_engine("offset") == EngineKind::SignOfOffset);
  CHECK(parse_engine("crossing") == EngineKind::RayCrossing);
  CHECK_FALSE(parse_engine("winding").has_value());
}

}  // TEST_SUITE

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
#include <numeric>

#include "support/oracles.hpp"
#include "vpip/geometry.hpp"
#include "vpip/sampling.hpp"

using namespace vpip;
using vpip::testing::thrown_code;

TEST_SUITE("sampling") {

TEST_CASE("regular_polygon places the first vertex on top") {
  const ConvexPolygon diamond = regular_polygon(4, 1.0);
  REQUIRE(diamond.size() == 4);
  const Point2 expected[] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(diamond.vertex(k).x - expected[k].x) <= 1e-15);
    CHECK(std::abs(diamond.vertex(k).y - expected[k].y) <= 1e-15);
    CHECK(std::hypot(diamond.vertex(k).x, diamond.vertex(k).y) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(signed_area(diamond) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("regular_polygon area matches the closed form") {
  const ConvexPolygon triangle = regular_polygon(3, 1.0);
  CHECK(signed_area(triangle) ==
        doctest::Approx(testing::regular_polygon_area(3, 1.0)).epsilon(1e-12));
  CHECK(testing::regular_polygon_area(3, 1.0) ==
        doctest::Approx(1.299038105676658).epsilon(1e-12));
}

TEST_CASE("regular_polygon rejects bad parameters") {
  CHECK(thrown_code([] { regular_polygon(2, 1.0); }) == ErrorCode::InvalidParameter);
  CHECK(thrown_code([] { regular_polygon(5, 0.0); }) == ErrorCode::InvalidParameter);
  CHECK(thrown_code([] { regular_polygon(5, -1.0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("random_convex_polygon is valid, on-circle and deterministic") {
  for (std::size_t n = 3; n <= 15; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Point2 center = {1.5, -2.0};
      const double radius = 2.0;
      const ConvexPolygon poly = random_convex_polygon(n, seed, radius, center);
      REQUIRE(poly.size() == n);
      for (Point2 v : poly.vertices()) {
        CHECK(distance(v, center) == doctest::Approx(radius).epsilon(1e-12));
      }
      const ConvexPolygon again = random_convex_polygon(n, seed, radius, center);
      CHECK(std::equal(poly.vertices().begin(), poly.vertices().end(),
                       again.vertices().begin(), again.vertices().end()));
    }
  }
  CHECK(thrown_code([] { random_convex_polygon(2, 1); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("sample_points is deterministic and respects the box") {
  const Box box = {-2, 0, 3, 1};
  const PointBatch a = sample_points(5'000, box, 7);
  const PointBatch b = sample_points(5'000, box, 7);
  CHECK(a == b);
  const PointBatch c = sample_points(5'000, box, 8);
  CHECK(a.xs != c.xs);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(a.xs[j] >= box.min_x);
    CHECK(a.xs[j] <= box.max_x);
    CHECK(a.ys[j] >= box.min_y);
    CHECK(a.ys[j] <= box.max_y);
  }
  CHECK(sample_points(0, box, 1).empty());
}

TEST_CASE("sample_points rejects a degenerate box") {
  CHECK(thrown_code([] { sample_points(10, {1, 0, 1, 1}, 0); }) ==
        ErrorCode::InvalidParameter);
  CHECK(thrown_code([] { sample_points(10, {2, 0, 1, 1}, 0); }) ==
        ErrorCode::InvalidParameter);
}

TEST_CASE("large samples concentrate around the box center") {
  // uniform on [-2,2]: sigma/sqrt(m) ~ 0.00115, so 0.01 is a ~9 sigma bound
  const std::size_t m = 1'000'000;
  const PointBatch pts = sample_points(m, {-2, -2, 2, 2}, 42);
  const double mean_x = std::accumulate(pts.xs.begin(), pts.xs.end(), 0.0) / m;
  const double mean_y = std::accumulate(pts.ys.begin(), pts.ys.end(), 0.0) / m;
  CHECK(std::abs(mean_x) <= 0.01);
  CHECK(std::abs(mean_y) <= 0.01);
}

TEST_CASE("mix_seed separates nearby inputs") {
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(0, 0) != mix_seed(1, 0));
  CHECK(mix_seed(42, 3) == mix_seed(42, 3));
}

}  // TEST_SUITE

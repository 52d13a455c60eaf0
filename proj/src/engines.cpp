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

#include "vpip/engines.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <thread>

namespace vpip {

namespace {

// Runs fn(chunk, begin, end) over contiguous chunks of [0, count), one chunk
// per thread. Results must not depend on the partitioning; all kernels below
// are pointwise, so they satisfy that by construction.
template <class Fn>
void for_each_chunk(std::size_t count, int threads, const Fn& fn) {
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(count, 1));
  if (chunks <= 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks - 1);
  const std::size_t base = count / chunks;
  const std::size_t extra = count % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = begin + base + (c < extra ? 1 : 0);
    if (c + 1 == chunks) {
      fn(c, begin, end);  // last chunk runs on the calling thread
    } else {
      workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    }
    begin = end;
  }
}

// The batch kernels walk the points in blocks small enough that a block's
// coordinates and scratch rows stay cache-resident across the per-generator
// (or per-edge) passes; the kernels are compute-bound instead of re-streaming
// the whole batch from memory once per generator. Blocking only reorders
// which points are visited when -- each point still sees the same operations
// in the same order, so masks are unchanged.
inline constexpr std::size_t kPointBlock = 4096;

// Branchless voronoi kernel: one inner-distance row, then one fused
// evaluate-and-compare pass per outer generator. kCount compiles in the work
// counters; the plain instantiation carries no bookkeeping at all.
template <bool kCount>
void voronoi_kernel(const GeneratorSet& g, const double* xs, const double* ys,
                    std::uint8_t* out, std::size_t count, BatchStats* stats) {
  alignas(64) double inner_sq[kPointBlock];
  std::uint64_t evals = 0;
  std::uint64_t comps = 0;
  const double ix = g.inner.x;
  const double iy = g.inner.y;
  for (std::size_t base = 0; base < count; base += kPointBlock) {
    const std::size_t len = std::min(kPointBlock, count - base);
    const double* bx = xs + base;
    const double* by = ys + base;
    std::uint8_t* bo = out + base;
    for (std::size_t j = 0; j < len; ++j) {
      const double dx = bx[j] - ix;
      const double dy = by[j] - iy;
      inner_sq[j] = dx * dx + dy * dy;
      if constexpr (kCount) ++evals;
    }
    std::fill_n(bo, len, std::uint8_t{1});
    for (const Point2& p : g.outer) {
      const double px = p.x;
      const double py = p.y;
      for (std::size_t j = 0; j < len; ++j) {
        const double dx = bx[j] - px;
        const double dy = by[j] - py;
        const double outer_sq = dx * dx + dy * dy;
        bo[j] &= static_cast<std::uint8_t>(inner_sq[j] <= outer_sq);
        if constexpr (kCount) {
          ++evals;
          ++comps;
        }
      }
    }
  }
  if constexpr (kCount) {
    stats->distance_evaluations += evals;
    stats->comparisons += comps;
  }
}

// Same comparisons through true L2 distances; sqrt is monotone, so the mask
// must match the squared kernel (the tests assert it does).
void voronoi_sqrt_kernel(const GeneratorSet& g, const double* xs, const double* ys,
                         std::uint8_t* out, std::size_t count) {
  alignas(64) double inner_dist[kPointBlock];
  const double ix = g.inner.x;
  const double iy = g.inner.y;
  for (std::size_t base = 0; base < count; base += kPointBlock) {
    const std::size_t len = std::min(kPointBlock, count - base);
    const double* bx = xs + base;
    const double* by = ys + base;
    std::uint8_t* bo = out + base;
    for (std::size_t j = 0; j < len; ++j) {
      const double dx = bx[j] - ix;
      const double dy = by[j] - iy;
      inner_dist[j] = std::sqrt(dx * dx + dy * dy);
    }
    std::fill_n(bo, len, std::uint8_t{1});
    for (const Point2& p : g.outer) {
      for (std::size_t j = 0; j < len; ++j) {
        const double dx = bx[j] - p.x;
        const double dy = by[j] - p.y;
        bo[j] &= static_cast<std::uint8_t>(inner_dist[j] <= std::sqrt(dx * dx + dy * dy));
      }
    }
  }
}

// Sign-of-offset kernel: counts, per point, the edges whose strict line test
// puts the point on the right-hand side; inside means 0 or n flags.
void offset_kernel(std::span<const Point2> v, const double* xs, const double* ys,
                   std::uint8_t* out, std::size_t count) {
  const std::size_t n = v.size();
  const auto all = static_cast<std::uint32_t>(n);
  alignas(64) std::uint32_t flags[kPointBlock];
  for (std::size_t base = 0; base < count; base += kPointBlock) {
    const std::size_t len = std::min(kPointBlock, count - base);
    const double* bx = xs + base;
    const double* by = ys + base;
    std::fill_n(flags, len, 0u);
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const double dvx = v[i].x - v[j].x;
      const double dvy = v[i].y - v[j].y;
      const double rhs = v[j].y * dvx - v[j].x * dvy;
      for (std::size_t q = 0; q < len; ++q) {
        const double lhs = by[q] * dvx - bx[q] * dvy;
        flags[q] += static_cast<std::uint32_t>(lhs < rhs);
      }
    }
    std::uint8_t* bo = out + base;
    for (std::size_t q = 0; q < len; ++q) {
      bo[q] = static_cast<std::uint8_t>((flags[q] == 0u) | (flags[q] == all));
    }
  }
}

// Ray-crossing kernel: per edge, flip the crossing parity where the +x ray
// hits, and latch points sitting exactly on the segment so the boundary
// stays closed.
void ray_kernel(std::span<const Point2> v, const double* xs, const double* ys,
                std::uint8_t* out, std::size_t count) {
  const std::size_t n = v.size();
  alignas(64) std::uint8_t parity[kPointBlock];
  alignas(64) std::uint8_t on_edge[kPointBlock];
  for (std::size_t base = 0; base < count; base += kPointBlock) {
    const std::size_t len = std::min(kPointBlock, count - base);
    const double* bx = xs + base;
    const double* by = ys + base;
    std::fill_n(parity, len, std::uint8_t{0});
    std::fill_n(on_edge, len, std::uint8_t{0});
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point2 w = v[j];  // edge runs w -> u
      const Point2 u = v[i];
      const double dvx = u.x - w.x;
      const double dvy = u.y - w.y;
      const double rhs = w.y * dvx - w.x * dvy;
      const bool going_up = u.y > w.y;
      const double min_x = std::min(w.x, u.x);
      const double max_x = std::max(w.x, u.x);
      const double min_y = std::min(w.y, u.y);
      const double max_y = std::max(w.y, u.y);
      for (std::size_t q = 0; q < len; ++q) {
        const double qx = bx[q];
        const double qy = by[q];
        const bool in_range = (u.y > qy) != (w.y > qy);
        const double lhs = qy * dvx - qx * dvy;
        const bool on_left = (lhs != rhs) & ((lhs > rhs) == going_up);
        parity[q] ^= static_cast<std::uint8_t>(in_range & on_left);
        const bool on_segment = (lhs == rhs) & (qx >= min_x) & (qx <= max_x) &
                                (qy >= min_y) & (qy <= max_y);
        on_edge[q] |= static_cast<std::uint8_t>(on_segment);
      }
    }
    std::uint8_t* bo = out + base;
    for (std::size_t q = 0; q < len; ++q) {
      bo[q] = static_cast<std::uint8_t>(on_edge[q] | parity[q]);
    }
  }
}

}  // namespace

PointBatch PointBatch::from_points(std::span<const Point2> points) {
  PointBatch batch;
  batch.reserve(points.size());
  for (const Point2& p : points) batch.push_back(p);
  return batch;
}

std::size_t count_inside(const InclusionMask& mask) {
  return std::accumulate(mask.begin(), mask.end(), std::size_t{0});
}

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::Voronoi: return "voronoi";
    case EngineKind::SignOfOffset: return "sign_of_offset";
    case EngineKind::RayCrossing: return "ray_crossing";
  }
  return "unknown";
}

std::optional<EngineKind> parse_engine(std::string_view name) {
  if (name == "voronoi") return EngineKind::Voronoi;
  if (name == "sign_of_offset" || name == "offset") return EngineKind::SignOfOffset;
  if (name == "ray_crossing" || name == "crossing") return EngineKind::RayCrossing;
  return std::nullopt;
}

bool voronoi_contains(const GeneratorSet& generators, Point2 p) {
  const double inner_sq = squared_distance(p, generators.inner);
  for (const Point2& outer : generators.outer) {
    if (squared_distance(p, outer) < inner_sq) return false;  // early break
  }
  return true;
}

InclusionMask voronoi_contains_batch(const GeneratorSet& generators,
                                     const PointBatch& points, int threads) {
  assert(points.xs.size() == points.ys.size());
  InclusionMask mask(points.size());
  for_each_chunk(points.size(), threads,
                 [&](std::size_t, std::size_t begin, std::size_t end) {
                   voronoi_kernel<false>(generators, points.xs.data() + begin,
                                         points.ys.data() + begin, mask.data() + begin,
                                         end - begin, nullptr);
                 });
  return mask;
}

InclusionMask voronoi_contains_batch(const GeneratorSet& generators,
                                     const PointBatch& points, BatchStats& stats,
                                     int threads) {
  assert(points.xs.size() == points.ys.size());
  InclusionMask mask(points.size());
  std::vector<BatchStats> local(static_cast<std::size_t>(std::max(threads, 1)));
  for_each_chunk(points.size(), threads,
                 [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                   voronoi_kernel<true>(generators, points.xs.data() + begin,
                                        points.ys.data() + begin, mask.data() + begin,
                                        end - begin, &local[chunk]);
                 });
  for (const BatchStats& s : local) {
    stats.distance_evaluations += s.distance_evaluations;
    stats.comparisons += s.comparisons;
  }
  return mask;
}

InclusionMask voronoi_contains_batch_sqrt(const GeneratorSet& generators,
                                          const PointBatch& points, int threads) {
  InclusionMask mask(points.size());
  for_each_chunk(points.size(), threads,
                 [&](std::size_t, std::size_t begin, std::size_t end) {
                   voronoi_sqrt_kernel(generators, points.xs.data() + begin,
                                       points.ys.data() + begin, mask.data() + begin,
                                       end - begin);
                 });
  return mask;
}

SquaredDistanceTable squared_distance_table(const GeneratorSet& generators,
                                            const PointBatch& points) {
  const std::size_t n = generators.edge_count();
  const std::size_t m = points.size();
  SquaredDistanceTable table{n + 1, m, std::vector<double>((n + 1) * m)};
  for (std::size_t row = 0; row <= n; ++row) {
    const Point2 p = row == 0 ? generators.inner : generators.outer[row - 1];
    double* dst = table.values.data() + row * m;
    for (std::size_t j = 0; j < m; ++j) {
      const double dx = points.xs[j] - p.x;
      const double dy = points.ys[j] - p.y;
      dst[j] = dx * dx + dy * dy;
    }
  }
  return table;
}

bool sign_of_offset_contains(const ConvexPolygon& polygon, Point2 p) {
  const std::span<const Point2> v = polygon.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double dvx = v[i].x - v[j].x;
    const double dvy = v[i].y - v[j].y;
    const double lhs = p.y * dvx - p.x * dvy;
    const double rhs = v[j].y * dvx - v[j].x * dvy;
    // CCW order: lhs < rhs puts the point strictly outside this edge, and no
    // point can be strictly outside every edge of a convex polygon, so the
    // early return matches the batch kernel's 0-or-n rule.
    if (lhs < rhs) return false;
  }
  return true;
}

InclusionMask sign_of_offset_contains_batch(const ConvexPolygon& polygon,
                                            const PointBatch& points, int threads) {
  InclusionMask mask(points.size());
  for_each_chunk(points.size(), threads,
                 [&](std::size_t, std::size_t begin, std::size_t end) {
                   offset_kernel(polygon.vertices(), points.xs.data() + begin,
                                 points.ys.data() + begin, mask.data() + begin, end - begin);
                 });
  return mask;
}

bool ray_crossing_contains(std::span<const Point2> vertices, Point2 p) {
  const std::size_t n = vertices.size();
  int crossings = 0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 w = vertices[j];
    const Point2 u = vertices[i];
    const double dvx = u.x - w.x;
    const double dvy = u.y - w.y;
    const bool in_range = (u.y > p.y) != (w.y > p.y);
    const double lhs = p.y * dvx - p.x * dvy;
    const double rhs = w.y * dvx - w.x * dvy;
    const bool on_left = (lhs != rhs) && ((lhs > rhs) == (u.y > w.y));
    crossings += (in_range && on_left);
    if (lhs == rhs && p.x >= std::min(w.x, u.x) && p.x <= std::max(w.x, u.x) &&
        p.y >= std::min(w.y, u.y) && p.y <= std::max(w.y, u.y)) {
      return true;  // exactly on the boundary
    }
  }
  return (crossings & 1) != 0;
}

int ray_crossing_count(std::span<const Point2> vertices, Point2 p) {
  const std::size_t n = vertices.size();
  int crossings = 0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 w = vertices[j];
    const Point2 u = vertices[i];
    const double dvx = u.x - w.x;
    const double dvy = u.y - w.y;
    const bool in_range = (u.y > p.y) != (w.y > p.y);
    const double lhs = p.y * dvx - p.x * dvy;
    const double rhs = w.y * dvx - w.x * dvy;
    const bool on_left = (lhs != rhs) && ((lhs > rhs) == (u.y > w.y));
    crossings += (in_range && on_left);
  }
  return crossings;
}

InclusionMask ray_crossing_contains_batch(std::span<const Point2> vertices,
                                          const PointBatch& points, int threads) {
  InclusionMask mask(points.size());
  for_each_chunk(points.size(), threads,
                 [&](std::size_t, std::size_t begin, std::size_t end) {
                   ray_kernel(vertices, points.xs.data() + begin, points.ys.data() + begin,
                              mask.data() + begin, end - begin);
                 });
  return mask;
}

}  // namespace vpip

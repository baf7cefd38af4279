// Copyright 2026 The gtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Geodesic one-center by support-set growth over pair and triple disks.

#include <algorithm>
#include <array>
#include <limits>

#include "gtc/disk.hpp"

namespace gtc {
namespace {

struct Disk {
  Point2 center;
  double radius = 0.0;
  std::vector<int> support;
};

double scale_of(const TriangulatedPolygon& tp) { return std::max(1.0, tp.polygon().diameter()); }

Point2 path_midpoint(const GeodesicPath& p) {
  double half = 0.5 * p.length, acc = 0.0;
  for (size_t k = 0; k + 1 < p.waypoints.size(); ++k) {
    double l = dist(p.waypoints[k], p.waypoints[k + 1]);
    if (acc + l >= half) return l > 0.0 ? lerp(p.waypoints[k], p.waypoints[k + 1], (half - acc) / l) : p.waypoints[k];
    acc += l;
  }
  return p.waypoints.back();
}

bool inside(const TriangulatedPolygon& tp, Point2 x) {
  return std::isfinite(x.x) && std::isfinite(x.y) && point_in_polygon(tp.polygon(), x) != Containment::kOutside;
}

// Distances and unit gradients from the three sites at x.
struct Chart {
  std::array<double, 3> d{};
  std::array<Point2, 3> g{};
};

std::optional<Chart> chart(const TriangulatedPolygon& tp, const std::array<Point2, 3>& s, Point2 x) {
  Chart c;
  try {
    for (int k = 0; k < 3; ++k) {
      AnchoredDistance ad = anchored_distance(tp, s[static_cast<size_t>(k)], x);
      c.d[static_cast<size_t>(k)] = ad.distance;
      c.g[static_cast<size_t>(k)] = unit(x - ad.anchor);
    }
  } catch (const PointOutsidePolygon&) {
    return std::nullopt;
  }
  return c;
}

double residual(const Chart& c) { return std::hypot(c.d[0] - c.d[1], c.d[0] - c.d[2]); }

// Origin inside the triangle spanned by the three gradient directions.
bool balanced(const Chart& c) {
  const double tol = 1e-9;
  int pos = 0, neg = 0;
  for (int k = 0; k < 3; ++k) {
    Point2 a = c.g[static_cast<size_t>(k)], b = c.g[static_cast<size_t>((k + 1) % 3)];
    double s = cross(b - a, Point2{0, 0} - a);
    if (s > tol) ++pos;
    if (s < -tol) ++neg;
  }
  return pos == 0 || neg == 0;
}

std::optional<Point2> circumcenter(Point2 a, Point2 b, Point2 c) {
  double d = 2.0 * cross(b - a, c - a);
  if (std::fabs(d) < 1e-14) return std::nullopt;
  Point2 u = b - a, v = c - a;
  double uu = dot(u, u), vv = dot(v, v);
  return a + Point2{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
}

// Damped Gauss-Newton on (d_a - d_b, d_a - d_c) = 0.
std::optional<Point2> solve_from(const TriangulatedPolygon& tp, const std::array<Point2, 3>& s, Point2 x, double scale) {
  if (!inside(tp, x)) return std::nullopt;
  auto c = chart(tp, s, x);
  if (!c) return std::nullopt;
  double f = residual(*c);
  for (int it = 0; it < 100 && f > 1e-12 * scale; ++it) {
    Point2 r0 = c->g[0] - c->g[1], r1 = c->g[0] - c->g[2];
    double f0 = c->d[0] - c->d[1], f1 = c->d[0] - c->d[2];
    double det = cross(r0, r1);
    Point2 step;
    if (std::fabs(det) > 1e-12) {
      step = Point2{-(f0 * r1.y - f1 * r0.y) / det, -(r0.x * f1 - r1.x * f0) / det};
    } else {
      double a = dot(r0, r0) + 1e-6, b = dot(r0, r1), d = dot(r1, r1) + 1e-6;
      Point2 rhs = Point2{-(r0.x * f0 + r1.x * f1), -(r0.y * f0 + r1.y * f1)};
      double dd = a * d - b * b;
      step = Point2{(d * rhs.x - b * rhs.y) / dd, (a * rhs.y - b * rhs.x) / dd};
    }
    bool moved = false;
    for (int h = 0; h < 40; ++h) {
      Point2 y = x + step;
      if (inside(tp, y)) {
        auto cy = chart(tp, s, y);
        if (cy && residual(*cy) < f) {
          x = y;
          c = cy;
          f = residual(*cy);
          moved = true;
          break;
        }
      }
      step = 0.5 * step;
    }
    if (!moved) break;
  }
  if (f > 1e-9 * scale) return std::nullopt;
  return x;
}

std::optional<Disk> pair_disk(const TriangulatedPolygon& tp, const std::vector<Point2>& S, int a, int b) {
  GeodesicPath p = shortest_path(tp, S[static_cast<size_t>(a)], S[static_cast<size_t>(b)]);
  return Disk{path_midpoint(p), 0.5 * p.length, {a, b}};
}

std::optional<Disk> triple_disk(const TriangulatedPolygon& tp, const std::vector<Point2>& S, int a, int b, int c) {
  std::array<Point2, 3> s = {S[static_cast<size_t>(a)], S[static_cast<size_t>(b)], S[static_cast<size_t>(c)]};
  auto x = equalization_point(tp, s[0], s[1], s[2]);
  if (!x) return std::nullopt;
  auto ch = chart(tp, s, *x);
  if (!ch || !balanced(*ch)) return std::nullopt;
  double r = std::max({ch->d[0], ch->d[1], ch->d[2]});
  return Disk{*x, r, {a, b, c}};
}

double farthest(const TriangulatedPolygon& tp, const std::vector<Point2>& S, const std::vector<int>& idx, Point2 c, int* which) {
  double best = -1.0;
  for (int i : idx) {
    double d = geodesic_distance(tp, c, S[static_cast<size_t>(i)]);
    if (d > best) {
      best = d;
      if (which) *which = i;
    }
  }
  return best;
}

// Local search on max distance, for the rare triple the root iteration misses.
Disk descend(const TriangulatedPolygon& tp, const std::vector<Point2>& S, const std::vector<int>& idx, Point2 x, double scale) {
  double fx = farthest(tp, S, idx, x, nullptr);
  double step = 0.1 * scale;
  while (step > 1e-13 * scale) {
    bool improved = false;
    for (int k = 0; k < 16; ++k) {
      Point2 y = x + step * polar(kTwoPi * k / 16.0);
      if (!inside(tp, y)) continue;
      double fy = farthest(tp, S, idx, y, nullptr);
      if (fy < fx) {
        x = y;
        fx = fy;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return Disk{x, fx, idx};
}

}  // namespace

bool disk_contains(const TriangulatedPolygon& tp, Point2 c, double r, Point2 x) {
  return geodesic_distance(tp, c, x) <= r + tp.polygon().eps();
}

std::optional<Point2> equalization_point(const TriangulatedPolygon& tp, Point2 a, Point2 b, Point2 c) {
  const double scale = scale_of(tp);
  std::array<Point2, 3> s = {a, b, c};
  std::vector<Point2> seeds;
  if (auto cc = circumcenter(a, b, c)) seeds.push_back(*cc);
  Point2 mab = path_midpoint(shortest_path(tp, a, b));
  Point2 mbc = path_midpoint(shortest_path(tp, b, c));
  Point2 mca = path_midpoint(shortest_path(tp, c, a));
  seeds.push_back((mab + mbc + mca) / 3.0);
  seeds.push_back(mab);
  seeds.push_back(mbc);
  seeds.push_back(mca);
  seeds.push_back((a + b + c) / 3.0);
  std::optional<Point2> fallback;
  for (Point2 x0 : seeds) {
    auto x = solve_from(tp, s, x0, scale);
    if (!x) continue;
    auto ch = chart(tp, s, *x);
    if (ch && balanced(*ch)) return x;
    if (!fallback) fallback = x;
  }
  return fallback;
}

OneCenterResult one_center(const TriangulatedPolygon& tp, const std::vector<Point2>& S) {
  if (S.empty()) throw GeometryError("one_center of an empty set");
  const double scale = scale_of(tp);
  const double tol = 1e-9 * scale;
  const int m = static_cast<int>(S.size());
  std::vector<int> all(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) all[static_cast<size_t>(i)] = i;

  Disk cur{S[0], 0.0, {0}};
  for (int round = 0; round < 8 * m + 8; ++round) {
    int far = -1;
    double fd = farthest(tp, S, all, cur.center, &far);
    if (fd <= cur.radius + tol) break;

    std::vector<int> pool = cur.support;
    pool.push_back(far);
    auto covers = [&](const Disk& d) {
      for (int i : pool) {
        if (geodesic_distance(tp, d.center, S[static_cast<size_t>(i)]) > d.radius + tol) return false;
      }
      return true;
    };
    std::optional<Disk> best;
    auto offer = [&](std::optional<Disk> d) {
      if (d && (!best || d->radius < best->radius) && covers(*d)) best = d;
    };
    const size_t b = cur.support.size();
    for (size_t u = 0; u < b; ++u) offer(pair_disk(tp, S, far, cur.support[u]));
    if (!best) {
      for (size_t u = 0; u < b; ++u) {
        for (size_t v = u + 1; v < b; ++v) offer(triple_disk(tp, S, far, cur.support[u], cur.support[v]));
      }
    }
    if (!best) best = descend(tp, S, pool, cur.center, scale);
    if (best->radius <= cur.radius) {
      // No progress is only possible through rounding; keep the larger cover.
      cur = *best;
      break;
    }
    cur = *best;
  }
  OneCenterResult out;
  out.center = cur.center;
  out.radius = cur.radius;
  out.determinators = cur.support;
  std::sort(out.determinators.begin(), out.determinators.end());
  return out;
}

}  // namespace gtc

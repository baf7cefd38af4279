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

#include "gtc/polygon.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace gtc {
namespace {

double signed_area(const std::vector<Point2>& v) {
  double a = 0.0;
  for (size_t i = 0, n = v.size(); i < n; ++i) a += cross(v[i], v[(i + 1) % n]);
  return 0.5 * a;
}

double bbox_diameter(const std::vector<Point2>& v) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (const auto& p : v) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

}  // namespace

SimplePolygon::SimplePolygon(std::vector<Point2> vertices, double base_eps) {
  if (!(base_eps > 0.0) || !std::isfinite(base_eps)) throw InvalidPolygon("epsilon must be positive");
  for (const auto& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidPolygon("non-finite coordinate");
  }
  if (vertices.size() < 3) throw InvalidPolygon("fewer than 3 vertices");
  diameter_ = bbox_diameter(vertices);
  eps_ = base_eps * std::max(1.0, diameter_ / 100.0);

  std::vector<Point2> merged;
  for (const auto& p : vertices) {
    if (merged.empty() || !near(merged.back(), p, eps_)) merged.push_back(p);
  }
  while (merged.size() > 1 && near(merged.front(), merged.back(), eps_)) merged.pop_back();
  if (merged.size() < 3) throw InvalidPolygon("fewer than 3 distinct vertices");

  double area = signed_area(merged);
  if (area == 0.0) throw InvalidPolygon("zero area");
  if (area < 0.0) {
    std::reverse(merged.begin(), merged.end());
    reversed_ = true;
  }

  const size_t n = merged.size();
  for (size_t i = 0; i < n; ++i) {
    Point2 a = merged[i], b = merged[(i + 1) % n], c = merged[(i + 2) % n];
    if (orientation(a, b, c) == 0 && dot(b - a, c - b) < 0.0) throw InvalidPolygon("edge folds back");
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(merged[i], merged[(i + 1) % n], merged[j], merged[(j + 1) % n])) {
        throw InvalidPolygon("edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
  vertices_ = std::move(merged);
  reflex_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    reflex_[i] = orientation(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n]) < 0;
  }
}

Point2 SimplePolygon::vertex(int i) const {
  int n = size();
  return vertices_[static_cast<size_t>(((i % n) + n) % n)];
}

double SimplePolygon::area() const { return signed_area(vertices_); }

Containment point_in_polygon(const SimplePolygon& poly, Point2 x) {
  const auto& v = poly.vertices();
  const size_t n = v.size();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    if (point_segment_distance(x, v[j], v[i]) <= poly.eps()) return Containment::kBoundary;
    if ((v[i].y > x.y) != (v[j].y > x.y)) {
      double xc = v[j].x + (x.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (x.x < xc) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

bool segment_inside(const SimplePolygon& poly, Point2 a, Point2 b) {
  if (point_in_polygon(poly, a) == Containment::kOutside) return false;
  if (point_in_polygon(poly, b) == Containment::kOutside) return false;
  Point2 d = b - a;
  double l2 = dot(d, d);
  if (l2 == 0.0) return true;
  std::vector<double> ts = {0.0, 1.0};
  const auto& v = poly.vertices();
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    Point2 c = v[i], e = v[(i + 1) % n];
    if (!segments_intersect(a, b, c, e)) continue;
    double den = cross(d, e - c);
    if (den == 0.0) {
      ts.push_back(dot(c - a, d) / l2);
      ts.push_back(dot(e - a, d) / l2);
    } else {
      ts.push_back(cross(c - a, e - c) / den);
    }
  }
  std::sort(ts.begin(), ts.end());
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    double t0 = std::clamp(ts[i], 0.0, 1.0), t1 = std::clamp(ts[i + 1], 0.0, 1.0);
    if (t1 - t0 <= 0.0) continue;
    if (point_in_polygon(poly, a + 0.5 * (t0 + t1) * d) == Containment::kOutside) return false;
  }
  return true;
}

std::optional<double> ray_cast(const SimplePolygon& poly, Point2 o, Point2 d, double tmin) {
  std::optional<double> best;
  const auto& v = poly.vertices();
  for (size_t i = 0, n = v.size(); i < n; ++i) {
    auto t = ray_segment(o, d, v[i], v[(i + 1) % n]);
    if (t && *t > tmin && (!best || *t < *best)) best = t;
  }
  return best;
}

TriangulatedPolygon::TriangulatedPolygon(SimplePolygon poly) : poly_(std::move(poly)) {
  const int n = poly_.size();
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;

  auto P = [&](int i) { return poly_[i]; };
  while (idx.size() > 3) {
    const size_t m = idx.size();
    bool clipped = false;
    for (size_t k = 0; k < m && !clipped; ++k) {
      int a = idx[(k + m - 1) % m], b = idx[k], c = idx[(k + 1) % m];
      if (orientation(P(a), P(b), P(c)) <= 0) continue;
      bool blocked = false;
      for (int p : idx) {
        if (p == a || p == b || p == c) continue;
        Point2 x = P(p);
        if (x == P(a) || x == P(b) || x == P(c)) continue;
        if (orientation(P(a), P(b), x) >= 0 && orientation(P(b), P(c), x) >= 0 &&
            orientation(P(c), P(a), x) >= 0) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris_.push_back({a, b, c});
      idx.erase(idx.begin() + static_cast<long>(k));
      clipped = true;
    }
    if (!clipped) throw InvalidPolygon("triangulation failed: no ear");
  }
  tris_.push_back({idx[0], idx[1], idx[2]});

  const int T = static_cast<int>(tris_.size());
  nbrs_.assign(tris_.size(), {-1, -1, -1});
  std::map<std::pair<int, int>, std::pair<int, int>> edges;
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < 3; ++k) {
      int u = tris_[static_cast<size_t>(t)][static_cast<size_t>(k)];
      int w = tris_[static_cast<size_t>(t)][static_cast<size_t>((k + 1) % 3)];
      auto key = std::minmax(u, w);
      auto it = edges.find(key);
      if (it == edges.end()) {
        edges[key] = {t, k};
      } else {
        nbrs_[static_cast<size_t>(t)][static_cast<size_t>(k)] = it->second.first;
        nbrs_[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second)] = t;
      }
    }
  }

  next_hop_.assign(static_cast<size_t>(T) * static_cast<size_t>(T), -1);
  for (int root = 0; root < T; ++root) {
    std::deque<int> queue = {root};
    next_hop_[static_cast<size_t>(root) * T + root] = root;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int nb : nbrs_[static_cast<size_t>(t)]) {
        if (nb < 0 || next_hop_[static_cast<size_t>(nb) * T + root] >= 0) continue;
        next_hop_[static_cast<size_t>(nb) * T + root] = t;
        queue.push_back(nb);
      }
    }
  }
}

int TriangulatedPolygon::dual_edge_count() const {
  int c = 0;
  for (const auto& nb : nbrs_)
    for (int x : nb) c += x >= 0;
  return c / 2;
}

int TriangulatedPolygon::locate(Point2 x) const {
  int best = -1;
  double best_m = -std::numeric_limits<double>::infinity();
  for (size_t t = 0; t < tris_.size(); ++t) {
    double m = std::numeric_limits<double>::infinity();
    bool inside = true;
    for (int k = 0; k < 3; ++k) {
      Point2 p = poly_[tris_[t][static_cast<size_t>(k)]];
      Point2 q = poly_[tris_[t][static_cast<size_t>((k + 1) % 3)]];
      m = std::min(m, cross(q - p, x - p) / dist(p, q));
      inside = inside && orientation(p, q, x) >= 0;
    }
    // The funnel tests orientations exactly, so a triangle holding x exactly wins.
    if (inside) return static_cast<int>(t);
    if (m > best_m) {
      best_m = m;
      best = static_cast<int>(t);
    }
  }
  if (best_m < -poly_.eps()) throw PointOutsidePolygon("point outside polygon");
  return best;
}

std::vector<int> TriangulatedPolygon::dual_path(int a, int b) const {
  const size_t T = tris_.size();
  std::vector<int> out = {a};
  while (a != b) {
    a = next_hop_[static_cast<size_t>(a) * T + static_cast<size_t>(b)];
    out.push_back(a);
  }
  return out;
}

std::pair<int, int> TriangulatedPolygon::portal(int a, int b) const {
  const auto& tri = tris_[static_cast<size_t>(a)];
  for (int k = 0; k < 3; ++k) {
    if (nbrs_[static_cast<size_t>(a)][static_cast<size_t>(k)] == b) {
      return {tri[static_cast<size_t>(k)], tri[static_cast<size_t>((k + 1) % 3)]};
    }
  }
  throw GeometryError("triangles are not adjacent");
}

}  // namespace gtc

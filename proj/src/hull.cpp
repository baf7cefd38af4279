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

#include "gtc/hull.hpp"

#include <algorithm>
#include <limits>

#include "gtc/disk.hpp"

namespace gtc {
namespace {

int direction_sign(Point2 a, Point2 b) {
  double c = cross(unit(a), unit(b));
  if (std::fabs(c) <= 1e-12) return 0;
  return c > 0.0 ? 1 : -1;
}

double cone_span(const TriangulatedPolygon& T, const std::vector<Point2>& Q, int v) {
  const double eps = T.polygon().eps();
  const Point2 pv = Q[static_cast<size_t>(v)];
  std::vector<double> ang;
  for (const Point2& q : Q) {
    if (near(q, pv, eps)) continue;
    const auto w = shortest_path(T, pv, q).waypoints;
    for (size_t t = 1; t < w.size(); ++t) {
      if (norm(w[t] - pv) <= eps) continue;
      ang.push_back(std::atan2(w[t].y - pv.y, w[t].x - pv.x));
      break;
    }
  }
  if (ang.size() < 2) return 0.0;
  std::sort(ang.begin(), ang.end());
  double gap = ang.front() + 2.0 * kPi - ang.back();
  for (size_t t = 1; t < ang.size(); ++t) gap = std::max(gap, ang[t] - ang[t - 1]);
  return 2.0 * kPi - gap;
}

}  // namespace

int geodesic_side(const TriangulatedPolygon& tp, Point2 v, Point2 w, Point2 s, bool* beyond) {
  const double eps = tp.polygon().eps();
  if (beyond) *beyond = false;
  if (near(v, s, eps)) return 0;
  std::vector<Point2> W = shortest_path(tp, v, w).waypoints;
  std::vector<Point2> S = shortest_path(tp, v, s).waypoints;
  Point2 p = v;
  size_t iw = 1, is = 1;
  while (true) {
    if (is == S.size()) return 0;
    Point2 ds = S[is] - p;
    if (norm(ds) <= eps) {
      p = S[is];
      ++is;
      continue;
    }
    Point2 dw;
    bool past_w = iw == W.size();
    if (past_w) {
      dw = W.back() - W[W.size() - 2];
    } else {
      dw = W[iw] - p;
      if (norm(dw) <= eps) {
        p = W[iw];
        ++iw;
        continue;
      }
    }
    int sg = direction_sign(dw, ds);
    if (sg != 0) return sg;
    if (dot(dw, ds) < 0.0) return -1;  // behind v, on the chord's backward extension
    if (past_w) {
      if (beyond) *beyond = true;
      return 0;
    }
    double lw = norm(dw), ls = norm(ds);
    if (std::fabs(lw - ls) <= eps) {
      p = W[iw];
      ++iw;
      ++is;
    } else if (lw < ls) {
      p = W[iw];
      ++iw;
    } else {
      p = S[is];
      ++is;
    }
  }
}

Point2 GeodesicHull::extreme(int i) const { return points_[static_cast<size_t>(extreme_index(i))]; }

int GeodesicHull::extreme_index(int i) const {
  int kk = k();
  return extremes_[static_cast<size_t>(((i % kk) + kk) % kk)];
}

double GeodesicHull::extreme_param(int i) const {
  int kk = k();
  return ring_param_[static_cast<size_t>(ring_of_extreme_[static_cast<size_t>(((i % kk) + kk) % kk)])];
}

Containment GeodesicHull::contains(Point2 x) const {
  const double e = eps();
  const size_t n = ring_.size();
  if (n == 1) return near(x, ring_[0], e) ? Containment::kBoundary : Containment::kOutside;
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    if (point_segment_distance(x, ring_[j], ring_[i]) <= e) return Containment::kBoundary;
    if ((ring_[i].y > x.y) != (ring_[j].y > x.y)) {
      double xc = ring_[j].x + (x.y - ring_[j].y) * (ring_[i].x - ring_[j].x) / (ring_[i].y - ring_[j].y);
      if (x.x < xc) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

std::optional<double> GeodesicHull::exit_param(Point2 x, Point2 d) const {
  const double e = eps();
  const size_t n = ring_.size();
  std::optional<double> best_t, best_param;
  for (size_t s = 0; s < n; ++s) {
    Point2 a = ring_[s], b = ring_[(s + 1) % n];
    if (a == b || cross(b - a, d) <= 0.0) continue;
    auto t = ray_segment(x, d, a, b);
    if (!t || *t < -e) continue;
    if (!best_t || *t < *best_t) {
      best_t = t;
      Point2 hit = x + *t * d;
      double along = std::clamp(dot(hit - a, unit(b - a)), 0.0, dist(a, b));
      best_param = std::fmod(ring_param_[s] + along, perimeter_);
    }
  }
  return best_param;
}

Point2 GeodesicHull::ring_point(double param) const {
  const size_t n = ring_.size();
  if (n == 1 || perimeter_ <= 0.0) return ring_[0];
  param = std::fmod(param, perimeter_);
  if (param < 0.0) param += perimeter_;
  size_t s = static_cast<size_t>(std::upper_bound(ring_param_.begin(), ring_param_.end(), param) - ring_param_.begin());
  s = s == 0 ? 0 : s - 1;
  Point2 a = ring_[s], b = ring_[(s + 1) % n];
  double l = dist(a, b);
  return l > 0.0 ? lerp(a, b, std::min(1.0, (param - ring_param_[s]) / l)) : a;
}

GeodesicHull geodesic_hull(std::shared_ptr<const TriangulatedPolygon> tp, const std::vector<Point2>& Q) {
  if (Q.empty()) throw HullError("empty point set");
  const TriangulatedPolygon& T = *tp;
  const double eps = T.polygon().eps();
  for (const auto& q : Q) {
    if (point_in_polygon(T.polygon(), q) == Containment::kOutside) throw PointOutsidePolygon("point outside polygon");
  }
  const int m = static_cast<int>(Q.size());

  // The leftmost point is usually extreme, but the hull can reach further
  // left around a reflex vertex of P. A point is extreme when the paths to all
  // others leave it inside a cone narrower than a half-turn.
  std::vector<int> order(static_cast<size_t>(m));
  for (int s = 0; s < m; ++s) order[static_cast<size_t>(s)] = s;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Point2& pa = Q[static_cast<size_t>(a)];
    const Point2& pb = Q[static_cast<size_t>(b)];
    return pa.x < pb.x || (pa.x == pb.x && pa.y < pb.y);
  });
  int start = -1;
  for (int v : order) {
    if (cone_span(T, Q, v) < kPi - 1e-9) {
      start = v;
      break;
    }
  }
  if (start < 0) throw HullError("no point with a convex cone of directions");

  // Gift wrapping: the next extreme leaves every point on the right of the
  // extended geodesic (ties go to the farther point).
  std::vector<int> ext = {start};
  std::vector<char> used(static_cast<size_t>(m), 0);
  used[static_cast<size_t>(start)] = 1;
  int cur = start;
  for (int step = 0; step <= m; ++step) {
    int best = -1;
    for (int pass = 0; pass <= m; ++pass) {
      bool changed = false;
      for (int s = 0; s < m; ++s) {
        const Point2& ps = Q[static_cast<size_t>(s)];
        if (s == cur || near(ps, Q[static_cast<size_t>(cur)], eps)) continue;
        if (best < 0) {
          best = s;
          changed = true;
          continue;
        }
        if (s == best || near(ps, Q[static_cast<size_t>(best)], eps)) continue;
        bool beyond = false;
        int side = geodesic_side(T, Q[static_cast<size_t>(cur)], Q[static_cast<size_t>(best)], ps, &beyond);
        if (side > 0 || (side == 0 && beyond)) {
          best = s;
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (best < 0 || best == start) break;
    if (used[static_cast<size_t>(best)]) throw HullError("gift wrapping revisited an extreme");
    used[static_cast<size_t>(best)] = 1;
    ext.push_back(best);
    cur = best;
  }

  GeodesicHull h;
  h.ambient_ = std::move(tp);
  h.points_ = Q;
  h.extremes_ = ext;
  h.label_of_.assign(static_cast<size_t>(m), -1);
  for (size_t i = 0; i < ext.size(); ++i) h.label_of_[static_cast<size_t>(ext[i])] = static_cast<int>(i);

  const size_t k = ext.size();
  if (k == 1) {
    h.ring_ = {Q[static_cast<size_t>(start)]};
    h.ring_param_ = {0.0};
    h.ring_of_extreme_ = {0};
  } else {
    for (size_t i = 0; i < k; ++i) {
      GeodesicPath p = shortest_path(T, Q[static_cast<size_t>(ext[i])], Q[static_cast<size_t>(ext[(i + 1) % k])]);
      h.ring_of_extreme_.push_back(static_cast<int>(h.ring_.size()));
      for (size_t w = 0; w + 1 < p.waypoints.size(); ++w) h.ring_.push_back(p.waypoints[w]);
      h.boundary_.push_back(std::move(p));
    }
    double acc = 0.0;
    for (size_t s = 0; s < h.ring_.size(); ++s) {
      h.ring_param_.push_back(acc);
      acc += dist(h.ring_[s], h.ring_[(s + 1) % h.ring_.size()]);
    }
    h.perimeter_ = acc;
  }

  for (int q = 0; q < m; ++q) {
    if (h.label_of_[static_cast<size_t>(q)] >= 0) continue;
    h.interior_.push_back(q);
    Containment c = h.contains(Q[static_cast<size_t>(q)]);
    if (c == Containment::kOutside) throw HullError("point outside its own hull");
    if (c == Containment::kBoundary) h.on_boundary_.push_back(q);
  }
  return h;
}

GeodesicHull geodesic_hull(const TriangulatedPolygon& tp, const std::vector<Point2>& Q) {
  return geodesic_hull(std::make_shared<const TriangulatedPolygon>(tp), Q);
}

std::vector<int> chain_extremes(const GeodesicHull& h, int a, int b) {
  const int k = h.k();
  a = ((a % k) + k) % k;
  b = ((b % k) + k) % k;
  std::vector<int> out = {a};
  while (a != b) {
    a = (a + 1) % k;
    out.push_back(a);
  }
  return out;
}

std::vector<int> chain_points(const GeodesicHull& h, int a, int b) {
  std::vector<int> out;
  for (int l : chain_extremes(h, a, b)) out.push_back(h.extreme_index(l));
  return out;
}

Subpolygon subpolygon(const GeodesicHull& h, int a, int b) {
  Subpolygon out;
  const int k = h.k();
  for (int l : chain_extremes(h, a, b)) {
    out.ring.push_back(h.extreme(l));
    if (l == ((b % k) + k) % k) break;
    const auto& w = h.boundary()[static_cast<size_t>(l)].waypoints;
    for (size_t s = 1; s + 1 < w.size(); ++s) out.ring.push_back(w[s]);
  }
  if (((a % k) + k) % k != ((b % k) + k) % k) {
    GeodesicPath back = shortest_path(h.ambient(), h.extreme(b), h.extreme(a));
    for (size_t s = 1; s + 1 < back.waypoints.size(); ++s) out.ring.push_back(back.waypoints[s]);
  }
  double area = 0.0;
  for (size_t i = 0, n = out.ring.size(); i < n; ++i) area += cross(out.ring[i], out.ring[(i + 1) % n]);
  out.area = 0.5 * std::fabs(area);
  out.degenerate = out.area <= h.eps() * std::max(1.0, h.ambient().polygon().diameter());
  return out;
}

double chain_radius(const GeodesicHull& h, int a, int b) {
  std::vector<Point2> pts;
  for (int q : chain_points(h, a, b)) pts.push_back(h.points()[static_cast<size_t>(q)]);
  return one_center(h.ambient(), pts).radius;
}

}  // namespace gtc

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

#include "gtc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

namespace gtc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Visibility of polygon vertex v from x. Cheap exact rejection first; the
// general clipped-segment test only when some vertex touches the segment.
bool sees_vertex(const SimplePolygon& poly, Point2 x, int v) {
  const int n = poly.size();
  Point2 pv = poly[v];
  if (x == pv) return true;
  Point2 prev = poly.vertex(v - 1), next = poly.vertex(v + 1);
  // x must lie in the closed interior wedge at v.
  Point2 d = x - pv;
  double a_next = angle_of(next - pv), a_prev = angle_of(prev - pv), a_x = angle_of(d);
  if (ccw_sweep(a_next, a_x) > ccw_sweep(a_next, a_prev) + 1e-12) return false;
  bool touching = false;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (i == v || j == v) continue;
    Point2 a = poly[i], b = poly[j];
    int o1 = orientation(x, pv, a), o2 = orientation(x, pv, b);
    int o3 = orientation(a, b, x), o4 = orientation(a, b, pv);
    if (o1 * o2 < 0 && o3 * o4 < 0) return false;
    if (segments_intersect(x, pv, a, b)) touching = true;
  }
  if (!touching) return point_in_polygon(poly, x) != Containment::kOutside;
  return segment_inside(poly, x, pv);
}

struct Probe {
  Point2 x;
  std::vector<char> sees;
};

Probe make_probe(const SimplePolygon& poly, Point2 x) {
  Probe p{x, std::vector<char>(static_cast<size_t>(poly.size()))};
  for (int v = 0; v < poly.size(); ++v) p.sees[static_cast<size_t>(v)] = sees_vertex(poly, x, v);
  return p;
}

struct SiteDistance {
  double value;
  Point2 anchor;
};

SiteDistance site_distance(const SimplePolygon& poly, const VisibilityGraph::Field& f, const Probe& pr) {
  if (segment_inside(poly, f.source, pr.x)) return {dist(f.source, pr.x), f.source};
  SiteDistance best{kInf, pr.x};
  for (int v = 0; v < poly.size(); ++v) {
    if (!pr.sees[static_cast<size_t>(v)]) continue;
    double c = f.dist[static_cast<size_t>(v)] + dist(poly[v], pr.x);
    if (c < best.value) best = {c, poly[v]};
  }
  return best;
}

// Smallest-norm point of the convex hull of the given vectors.
Point2 min_norm_hull_point(const std::vector<Point2>& g) {
  if (g.empty()) return {0.0, 0.0};
  // Origin enclosed when no open half-plane holds every vector.
  std::vector<double> ang;
  for (const auto& v : g) ang.push_back(angle_of(v));
  std::sort(ang.begin(), ang.end());
  double gap = ang.front() + kTwoPi - ang.back();
  for (size_t i = 0; i + 1 < ang.size(); ++i) gap = std::max(gap, ang[i + 1] - ang[i]);
  if (g.size() >= 2 && gap < kPi - 1e-12) return {0.0, 0.0};
  Point2 best = g[0];
  for (size_t i = 0; i < g.size(); ++i) {
    if (norm(g[i]) < norm(best)) best = g[i];
    for (size_t j = i + 1; j < g.size(); ++j) {
      Point2 c = closest_on_segment({0.0, 0.0}, g[i], g[j]);
      if (norm(c) < norm(best)) best = c;
    }
  }
  return best;
}

class CenterSearch {
 public:
  CenterSearch(const VisibilityGraph& vg, std::vector<const VisibilityGraph::Field*> fields)
      : vg_(vg), poly_(vg.polygon()), fields_(std::move(fields)) {}

  double value(Point2 x, std::vector<SiteDistance>* per_site = nullptr) const {
    if (point_in_polygon(poly_, x) == Containment::kOutside) return kInf;
    Probe pr = make_probe(poly_, x);
    double f = 0.0;
    if (per_site) per_site->clear();
    for (const auto* fd : fields_) {
      SiteDistance sd = site_distance(poly_, *fd, pr);
      f = std::max(f, sd.value);
      if (per_site) per_site->push_back(sd);
    }
    return f;
  }

  // Local grid rounds followed by an active-set steepest descent.
  OracleCenter refine(Point2 x, double h, int rounds) const {
    double fx = value(x);
    for (int r = 0; r < rounds; ++r) {
      h *= 0.5;
      Point2 best = x;
      double fb = fx;
      for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
          Point2 y = x + Point2{i * h, j * h};
          double fy = value(y);
          if (fy < fb) {
            fb = fy;
            best = y;
          }
        }
      }
      x = best;
      fx = fb;
    }
    return descend(x, fx, h);
  }

 private:
  OracleCenter descend(Point2 x, double fx, double h) const {
    const double scale = std::max(1.0, poly_.diameter());
    double tau = 1e-3 * scale;
    double step = h;
    std::vector<SiteDistance> sd;
    for (int it = 0; it < 4000 && tau > 1e-15 * scale; ++it) {
      fx = value(x, &sd);
      std::vector<Point2> grads;
      for (const auto& s : sd) {
        if (s.value >= fx - tau) grads.push_back(unit(x - s.anchor));
      }
      Point2 g = min_norm_hull_point(grads);
      if (norm(g) < 1e-12) {
        tau *= 0.1;
        continue;
      }
      Point2 u = -1.0 * unit(g);
      bool moved = false;
      for (double a = std::max(step, 1e-13 * scale) * 4.0; a > 1e-16 * scale; a *= 0.5) {
        Point2 y = x + a * u;
        double fy = value(y);
        if (fy < fx) {
          x = y;
          fx = fy;
          step = a;
          moved = true;
          break;
        }
      }
      if (!moved) tau *= 0.1;
    }
    return {x, value(x)};
  }

  const VisibilityGraph& vg_;
  const SimplePolygon& poly_;
  std::vector<const VisibilityGraph::Field*> fields_;
};

struct Box {
  double x0, y0, x1, y1;
};

// Bounding box of every pairwise shortest path; contains the relative hull.
Box path_box(const VisibilityGraph& vg, const std::vector<VisibilityGraph::Field>& fields,
             const std::vector<Point2>& pts) {
  Box b{kInf, kInf, -kInf, -kInf};
  auto add = [&](Point2 p) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    add(pts[i]);
    for (size_t j = i + 1; j < pts.size(); ++j) {
      for (const auto& w : vg.path(fields[i], pts[j])) add(w);
    }
  }
  double pad = 1e-3 * std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-6});
  b.x0 -= pad;
  b.y0 -= pad;
  b.x1 += pad;
  b.y1 += pad;
  return b;
}

}  // namespace

VisibilityGraph::VisibilityGraph(const SimplePolygon& poly) : poly_(poly), n_(poly.size()) {
  vis_.assign(static_cast<size_t>(n_ * n_), 0);
  for (int u = 0; u < n_; ++u) {
    vis_[static_cast<size_t>(u * n_ + u)] = 1;
    for (int v = u + 1; v < n_; ++v) {
      bool s = segment_inside(poly_, poly_[u], poly_[v]);
      vis_[static_cast<size_t>(u * n_ + v)] = vis_[static_cast<size_t>(v * n_ + u)] = s;
    }
  }
}

VisibilityGraph::Field VisibilityGraph::field(Point2 s) const {
  Field f{s, std::vector<double>(static_cast<size_t>(n_), kInf), std::vector<int>(static_cast<size_t>(n_), -1)};
  std::vector<char> done(static_cast<size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    if (segment_inside(poly_, s, poly_[v])) f.dist[static_cast<size_t>(v)] = dist(s, poly_[v]);
  }
  for (int it = 0; it < n_; ++it) {
    int u = -1;
    for (int v = 0; v < n_; ++v) {
      if (!done[static_cast<size_t>(v)] && (u < 0 || f.dist[static_cast<size_t>(v)] < f.dist[static_cast<size_t>(u)])) u = v;
    }
    if (u < 0 || f.dist[static_cast<size_t>(u)] == kInf) break;
    done[static_cast<size_t>(u)] = 1;
    for (int v = 0; v < n_; ++v) {
      if (done[static_cast<size_t>(v)] || !visible(u, v)) continue;
      double c = f.dist[static_cast<size_t>(u)] + dist(poly_[u], poly_[v]);
      if (c < f.dist[static_cast<size_t>(v)]) {
        f.dist[static_cast<size_t>(v)] = c;
        f.pred[static_cast<size_t>(v)] = u;
      }
    }
  }
  return f;
}

double VisibilityGraph::distance(const Field& f, Point2 x, Point2* anchor) const {
  if (segment_inside(poly_, f.source, x)) {
    if (anchor) *anchor = f.source;
    return dist(f.source, x);
  }
  double best = kInf;
  for (int v = 0; v < n_; ++v) {
    if (f.dist[static_cast<size_t>(v)] == kInf) continue;
    double c = f.dist[static_cast<size_t>(v)] + dist(poly_[v], x);
    if (c < best && segment_inside(poly_, poly_[v], x)) {
      best = c;
      if (anchor) *anchor = poly_[v];
    }
  }
  return best;
}

std::vector<Point2> VisibilityGraph::path(const Field& f, Point2 x) const {
  std::vector<Point2> out = {x};
  if (segment_inside(poly_, f.source, x)) {
    out.push_back(f.source);
  } else {
    int best = -1;
    double bd = kInf;
    for (int v = 0; v < n_; ++v) {
      double c = f.dist[static_cast<size_t>(v)] + dist(poly_[v], x);
      if (c < bd && segment_inside(poly_, poly_[v], x)) {
        bd = c;
        best = v;
      }
    }
    for (int v = best; v >= 0; v = f.pred[static_cast<size_t>(v)]) out.push_back(poly_[v]);
    out.push_back(f.source);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double oracle_distance(const SimplePolygon& poly, Point2 s, Point2 t) {
  for (Point2 x : {s, t}) {
    if (point_in_polygon(poly, x) == Containment::kOutside) throw PointOutsidePolygon("point outside polygon");
  }
  VisibilityGraph vg(poly);
  return vg.distance(vg.field(s), t);
}

OracleCenter oracle_one_center(const SimplePolygon& poly, const std::vector<Point2>& S, const OracleConfig& cfg) {
  if (S.empty()) throw std::invalid_argument("empty point set");
  if (S.size() == 1) return {S[0], 0.0};
  VisibilityGraph vg(poly);
  std::vector<VisibilityGraph::Field> fields;
  for (const auto& s : S) fields.push_back(vg.field(s));
  std::vector<const VisibilityGraph::Field*> ptrs;
  for (const auto& f : fields) ptrs.push_back(&f);
  CenterSearch search(vg, ptrs);

  Box b = path_box(vg, fields, S);
  const int G = std::max(cfg.grid_resolution, 2);
  double hx = (b.x1 - b.x0) / (G - 1), hy = (b.y1 - b.y0) / (G - 1);
  Point2 best = S[0];
  double fb = search.value(best);
  for (int i = 0; i < G; ++i) {
    for (int j = 0; j < G; ++j) {
      Point2 x{b.x0 + i * hx, b.y0 + j * hy};
      double f = search.value(x);
      if (f < fb) {
        fb = f;
        best = x;
      }
    }
  }
  return search.refine(best, std::max(hx, hy), std::max(cfg.refinement_rounds, 3));
}

OracleTwoCenter oracle_two_center(const SimplePolygon& poly, const std::vector<Point2>& Q, const OracleConfig& cfg) {
  return oracle_two_center_restricted(poly, Q, {}, cfg);
}

OracleTwoCenter oracle_two_center_restricted(const SimplePolygon& poly, const std::vector<Point2>& Q,
                                             const std::vector<int>& forced, const OracleConfig& cfg) {
  const int m = static_cast<int>(Q.size());
  if (m > 12) throw TooLarge("oracle_two_center supports at most 12 points");
  if (m == 0) throw std::invalid_argument("empty point set");
  VisibilityGraph vg(poly);
  std::vector<VisibilityGraph::Field> fields;
  for (const auto& q : Q) fields.push_back(vg.field(q));

  const uint32_t full = (1u << m) - 1u;
  std::vector<double> coarse(full + 1, kInf);
  std::vector<Point2> coarse_at(full + 1);
  coarse[0] = 0.0;
  for (int i = 0; i < m; ++i) {
    coarse[1u << i] = 0.0;
    coarse_at[1u << i] = Q[static_cast<size_t>(i)];
  }

  Box b = path_box(vg, fields, Q);
  const int G = std::max(cfg.grid_resolution, 2);
  double hx = (b.x1 - b.x0) / (G - 1), hy = (b.y1 - b.y0) / (G - 1);
  std::vector<double> d(static_cast<size_t>(m));
  std::vector<double> f(full + 1);
  for (int i = 0; i < G; ++i) {
    for (int j = 0; j < G; ++j) {
      Point2 x{b.x0 + i * hx, b.y0 + j * hy};
      if (point_in_polygon(poly, x) == Containment::kOutside) continue;
      Probe pr = make_probe(poly, x);
      for (int s = 0; s < m; ++s) d[static_cast<size_t>(s)] = site_distance(poly, fields[static_cast<size_t>(s)], pr).value;
      f[0] = 0.0;
      for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t low = mask & (~mask + 1u);
        f[mask] = std::max(f[mask ^ low], d[static_cast<size_t>(__builtin_ctz(low))]);
        if (f[mask] < coarse[mask]) {
          coarse[mask] = f[mask];
          coarse_at[mask] = x;
        }
      }
    }
  }

  const double slack = 2.0 * std::hypot(hx, hy);
  std::map<uint32_t, OracleCenter> refined;
  auto refine = [&](uint32_t mask) -> const OracleCenter& {
    auto it = refined.find(mask);
    if (it != refined.end()) return it->second;
    std::vector<Point2> pts;
    std::vector<const VisibilityGraph::Field*> ptrs;
    for (int s = 0; s < m; ++s) {
      if (mask & (1u << s)) {
        pts.push_back(Q[static_cast<size_t>(s)]);
        ptrs.push_back(&fields[static_cast<size_t>(s)]);
      }
    }
    OracleCenter c;
    if (pts.empty()) {
      c = {Q[0], 0.0};
    } else if (pts.size() == 1) {
      c = {pts[0], 0.0};
    } else {
      CenterSearch search(vg, ptrs);
      c = search.refine(coarse_at[mask], std::max(hx, hy), std::max(cfg.refinement_rounds, 3));
    }
    return refined.emplace(mask, c).first->second;
  };

  struct Split {
    double lower;
    uint32_t mask;
  };
  std::vector<Split> splits;
  uint32_t must1 = 0, must2 = 0;
  for (size_t s = 0; s < forced.size(); ++s) {
    if (forced[s] == 1) must1 |= 1u << s;
    if (forced[s] == 2) must2 |= 1u << s;
  }
  // Unrestricted splits are symmetric, so point 0 can stay on side 1.
  const uint32_t first = forced.empty() ? 1u : 0u, stride = forced.empty() ? 2u : 1u;
  for (uint32_t mask = first; mask <= full; mask += stride) {
    if ((mask & must1) != must1 || (mask & must2) != 0) continue;
    uint32_t other = full ^ mask;
    splits.push_back({std::max(coarse[mask], coarse[other]), mask});
  }
  std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
    return a.lower < b.lower || (a.lower == b.lower && a.mask < b.mask);
  });

  OracleTwoCenter out;
  out.radius = kInf;
  uint32_t best_mask = full;
  for (const auto& sp : splits) {
    if (sp.lower - slack > out.radius) break;
    uint32_t other = full ^ sp.mask;
    const OracleCenter& a = refine(sp.mask);
    const OracleCenter& c = refine(other);
    double r = std::max(a.radius, c.radius);
    if (r < out.radius) {
      out.radius = r;
      out.c1 = a.center;
      out.c2 = other ? c.center : a.center;
      best_mask = sp.mask;
    }
  }
  out.assignment.assign(static_cast<size_t>(m), 2);
  for (int s = 0; s < m; ++s) {
    if (best_mask & (1u << s)) out.assignment[static_cast<size_t>(s)] = 1;
  }

  // The larger side's radius must be pinned by at most three of its points.
  uint32_t side = refine(best_mask).radius >= refine(full ^ best_mask).radius ? best_mask : (full ^ best_mask);
  const OracleCenter& sc = refine(side);
  std::vector<std::pair<double, int>> by_dist;
  for (int s = 0; s < m; ++s) {
    if (side & (1u << s)) by_dist.push_back({vg.distance(fields[static_cast<size_t>(s)], sc.center), s});
  }
  std::sort(by_dist.rbegin(), by_dist.rend());
  out.candidate_radius = 0.0;
  double best_gap = kInf;
  // Try every subset of size <= 3 among the four farthest points.
  const size_t top = std::min<size_t>(by_dist.size(), 4);
  for (uint32_t sub = 1; sub < (1u << top); ++sub) {
    if (__builtin_popcount(sub) > 3) continue;
    uint32_t mask = 0;
    for (size_t k = 0; k < top; ++k) {
      if (sub & (1u << k)) mask |= 1u << by_dist[k].second;
    }
    double r = refine(mask).radius;
    if (std::fabs(r - out.radius) < best_gap) {
      best_gap = std::fabs(r - out.radius);
      out.candidate_radius = r;
    }
  }
  out.consistent = best_gap <= 1e-4 * std::max(1.0, out.radius);
  return out;
}

}  // namespace gtc

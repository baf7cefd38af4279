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

#include "gtc/decision.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>

namespace gtc {
namespace {

int mod(int a, int k) { return ((a % k) + k) % k; }

std::vector<Point2> gather(const GeodesicHull& h, const std::vector<int>& idx) {
  std::vector<Point2> out;
  out.reserve(idx.size());
  for (int q : idx) out.push_back(h.points()[static_cast<size_t>(q)]);
  return out;
}

// Ring parameter of the ring point closest to x.
double nearest_ring_param(const GeodesicHull& h, Point2 x) {
  const auto& ring = h.ring();
  const auto& par = h.ring_param();
  double best = 1e300, param = 0.0;
  for (size_t s = 0; s < ring.size(); ++s) {
    Point2 a = ring[s], b = ring[(s + 1) % ring.size()];
    double l2 = dot(b - a, b - a);
    double t = l2 > 0.0 ? std::clamp(dot(x - a, b - a) / l2, 0.0, 1.0) : 0.0;
    double d = dist(x, lerp(a, b, t));
    if (d < best) {
      best = d;
      param = par[s] + t * std::sqrt(l2);
    }
  }
  return param;
}

// Where the geodesic from v through q, extended past q, leaves the hull.
double boundary_projection(const GeodesicHull& h, Point2 v, Point2 q, double v_param) {
  if (dist(v, q) <= h.eps()) return v_param;
  if (h.contains(q) == Containment::kBoundary) return nearest_ring_param(h, q);
  GeodesicPath p = shortest_path(h.ambient(), v, q);
  Point2 from = p.waypoints.size() >= 2 ? p.waypoints[p.waypoints.size() - 2] : v;
  if (auto e = h.exit_param(q, q - from)) return *e;
  return nearest_ring_param(h, q);
}

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Positions on the boundary of I_t worth trying as a center.
std::vector<Point2> candidates(const ArcBoundary& b, const EventSet& ev) {
  std::vector<Point2> out = ev.breakpoints;
  for (const auto& e : ev.events) out.push_back(e.position);
  if (b.point) out.push_back(b.center);
  return out;
}

Point2 any_point(const ArcBoundary& b, const EventSet& ev) {
  if (b.point) return b.center;
  return ev.breakpoints.empty() ? b.elements.front().from : ev.breakpoints.front();
}

bool covers_all(const TriangulatedPolygon& tp, const CenterPair& c, const std::vector<Point2>& pts, double r) {
  for (Point2 q : pts) {
    if (geodesic_distance(tp, c.first, q) > r && geodesic_distance(tp, c.second, q) > r) return false;
  }
  return true;
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::kHullRadius: return "hull-radius";
    case Branch::kSharedVertex: return "shared-vertex";
    case Branch::kIEmpty: return "I-empty";
    case Branch::kQIEmpty: return "QI-empty";
    case Branch::kMBothEmpty: return "M-both-empty";
    case Branch::kMOneEmpty: return "M-one-empty";
    case Branch::kScan: return "scan";
  }
  return "?";
}

DecisionContext::DecisionContext(GeodesicHull h)
    : h_(std::move(h)), tol_(1e-9 * std::max(1.0, h_.ambient().polygon().diameter())) {}

void DecisionContext::check_pair(int i, int j) const {
  const int k = h_.k();
  if (k < 2) throw InvalidPair("the hull has fewer than two extremes");
  if (i < 0 || j < 0 || i >= k || j >= k || i == j) throw InvalidPair("pair labels must be distinct and below k");
}

std::vector<int> DecisionContext::first_side(int i, int j) const { return chain_points(h_, j + 1, i); }
std::vector<int> DecisionContext::second_side(int i, int j) const { return chain_points(h_, i + 1, j); }

const OneCenterResult& DecisionContext::one_center_of(std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  auto it = memo_.find(idx);
  if (it != memo_.end()) return it->second;
  OneCenterResult res = one_center(ambient(), gather(h_, idx));
  for (int& d : res.determinators) d = idx[static_cast<size_t>(d)];
  return memo_.emplace(std::move(idx), std::move(res)).first->second;
}

const OneCenterResult& DecisionContext::hull_center() {
  std::vector<int> all(h_.points().size());
  for (size_t q = 0; q < all.size(); ++q) all[q] = static_cast<int>(q);
  return one_center_of(all);
}

const DecisionContext::SharedSplit& DecisionContext::shared_vertex_split(int i, int j, int v) {
  const int k = h_.k();
  auto key = std::make_tuple(mod(i, k), mod(j, k), mod(v, k));
  auto it = shared_.find(key);
  if (it != shared_.end()) return it->second;

  const int vq = h_.extreme_index(v);
  const Point2 vp = h_.extreme(v);
  const double vpar = h_.extreme_param(v);
  const double per = h_.perimeter();
  const std::vector<int> base1 = merged(first_side(i, j), {vq});
  const std::vector<int> base2 = merged(second_side(i, j), {vq});

  // Interior points in clockwise order of their boundary projection from v.
  std::vector<std::pair<double, int>> order;
  for (int q : h_.interior_points()) {
    double p = boundary_projection(h_, vp, h_.points()[static_cast<size_t>(q)], vpar);
    double key_param = per > 0.0 ? std::fmod(p - vpar + per, per) : 0.0;
    if (key_param >= per - tol_) key_param = 0.0;
    order.push_back({key_param, q});
  }
  std::sort(order.begin(), order.end());
  std::vector<std::vector<int>> groups;
  for (size_t a = 0; a < order.size(); ++a) {
    if (a == 0 || order[a].first - order[a - 1].first > tol_) groups.emplace_back();
    groups.back().push_back(order[a].second);
  }

  SharedSplit best;
  best.radius = 1e300;
  for (size_t s = 0; s <= groups.size(); ++s) {
    std::vector<int> head, tail;
    for (size_t g = 0; g < groups.size(); ++g) {
      auto& dst = g < s ? head : tail;
      dst.insert(dst.end(), groups[g].begin(), groups[g].end());
    }
    for (int orient = 0; orient < 2; ++orient) {
      std::vector<int> s1 = merged(base1, orient == 0 ? tail : head);
      std::vector<int> s2 = merged(base2, orient == 0 ? head : tail);
      double rad = std::max(one_center_of(s1).radius, one_center_of(s2).radius);
      if (rad < best.radius) {
        best.radius = rad;
        best.side1 = s1;
        best.side2 = s2;
      }
    }
  }
  return shared_.emplace(key, std::move(best)).first->second;
}

std::optional<CenterPair> shared_vertex_decide(DecisionContext& ctx, int i, int j, double r, int v) {
  ctx.check_pair(i, j);
  const auto& split = ctx.shared_vertex_split(i, j, v);
  if (split.radius > r + ctx.tol()) return std::nullopt;
  return CenterPair{ctx.one_center_of(split.side1).center, ctx.one_center_of(split.side2).center};
}

std::optional<CenterPair> scan_decide(const TriangulatedPolygon& tp, const std::vector<Point2>& side1,
                                      const std::vector<Point2>& side2, const std::vector<Point2>& interior,
                                      double r, double tol) {
  const size_t m = interior.size();
  const size_t words = (m + 63) / 64;
  auto mask_of = [&](Point2 c) {
    std::vector<uint64_t> w(words, 0);
    for (size_t q = 0; q < m; ++q) {
      if (geodesic_distance(tp, c, interior[q]) <= r + tol) w[q / 64] |= uint64_t{1} << (q % 64);
    }
    return w;
  };
  std::vector<uint64_t> full(words, ~uint64_t{0});
  if (m % 64 != 0 && words > 0) full.back() = (uint64_t{1} << (m % 64)) - 1;
  std::vector<std::vector<uint64_t>> m1, m2;
  for (Point2 c : side1) m1.push_back(mask_of(c));
  for (Point2 c : side2) m2.push_back(mask_of(c));
  for (size_t a = 0; a < side1.size(); ++a) {
    for (size_t b = 0; b < side2.size(); ++b) {
      bool ok = true;
      for (size_t w = 0; w < words && ok; ++w) ok = (m1[a][w] | m2[b][w]) == full[w];
      if (ok) return CenterPair{side1[a], side2[b]};
    }
  }
  return std::nullopt;
}

DecisionResult decide(DecisionContext& ctx, int i, int j, double r) {
  ctx.check_pair(i, j);
  const GeodesicHull& h = ctx.hull();
  const TriangulatedPolygon& tp = ctx.ambient();
  const double tol = ctx.tol();
  const std::vector<int> q1 = ctx.first_side(i, j), q2 = ctx.second_side(i, j);
  const std::vector<int>& qi = h.interior_points();
  const std::vector<Point2> qi_pts = gather(h, qi);

  DecisionResult res;
  auto accept = [&](CenterPair c, Branch b) {
    res.feasible = true;
    res.centers = c;
    res.branch = b;
    ctx.count(b);
    res.assignment.assign(h.points().size(), 0);
    for (int q : q1) res.assignment[static_cast<size_t>(q)] = 1;
    for (int q : q2) res.assignment[static_cast<size_t>(q)] = 2;
    for (int q : qi) {
      Point2 p = h.points()[static_cast<size_t>(q)];
      double d1 = geodesic_distance(tp, c.first, p), d2 = geodesic_distance(tp, c.second, p);
      res.assignment[static_cast<size_t>(q)] = d1 <= r + tol || d1 <= d2 ? 1 : 2;
    }
    return res;
  };
  auto reject = [&](Branch b) {
    res.branch = b;
    ctx.count(b);
    return res;
  };

  const OneCenterResult& all = ctx.hull_center();
  if (r + tol >= all.radius) return accept({all.center, all.center}, Branch::kHullRadius);

  for (int v : {i, i + 1, j, j + 1}) {
    if (auto c = shared_vertex_decide(ctx, i, j, r, v)) return accept(*c, Branch::kSharedVertex);
  }

  const OneCenterResult& oc1 = ctx.one_center_of(q1);
  const OneCenterResult& oc2 = ctx.one_center_of(q2);
  if (oc1.radius > r + tol || oc2.radius > r + tol) return reject(Branch::kIEmpty);
  if (qi.empty()) return accept({oc1.center, oc2.center}, Branch::kQIEmpty);

  auto b1 = disks_intersection(h, gather(h, q1), r);
  auto b2 = disks_intersection(h, gather(h, q2), r);
  if (!b1 || !b2) return reject(Branch::kIEmpty);
  EventSet ev1 = compute_events(tp, *b1, qi_pts, 0.0);
  EventSet ev2 = compute_events(tp, *b2, qi_pts, 0.0);

  const bool m1_empty = ev1.events.empty(), m2_empty = ev2.events.empty();
  if (m1_empty && m2_empty) {
    std::vector<char> held(qi.size(), 0);
    for (int q : ev1.covers) held[static_cast<size_t>(q)] = 1;
    for (int q : ev2.covers) held[static_cast<size_t>(q)] = 1;
    if (std::count(held.begin(), held.end(), 0) > 0) return reject(Branch::kMBothEmpty);
    return accept({any_point(*b1, ev1), any_point(*b2, ev2)}, Branch::kMBothEmpty);
  }
  if (m1_empty || m2_empty) {
    // The center on the event-free side holds exactly its covering points
    // wherever it sits; the other disk must take everything else.
    const EventSet& quiet = m1_empty ? ev1 : ev2;
    std::vector<int> rest = m1_empty ? q2 : q1;
    std::vector<char> held(qi.size(), 0);
    for (int q : quiet.covers) held[static_cast<size_t>(q)] = 1;
    for (size_t q = 0; q < qi.size(); ++q) {
      if (!held[q]) rest.push_back(qi[q]);
    }
    const OneCenterResult& oc = ctx.one_center_of(rest);
    if (oc.radius > r + tol) return reject(Branch::kMOneEmpty);
    Point2 fixed = m1_empty ? any_point(*b1, ev1) : any_point(*b2, ev2);
    return accept(m1_empty ? CenterPair{fixed, oc.center} : CenterPair{oc.center, fixed}, Branch::kMOneEmpty);
  }

  auto c = scan_decide(tp, candidates(*b1, ev1), candidates(*b2, ev2), qi_pts, r, tol);
  if (!c) return reject(Branch::kScan);
  if (!covers_all(tp, *c, qi_pts, r + 1e-7 * std::max(1.0, tp.polygon().diameter()))) {
    std::cerr << "warning: scan witness misses a point\n";
  }
  return accept(*c, Branch::kScan);
}

DecisionResult decide(const GeodesicHull& h, int i, int j, double r) {
  DecisionContext ctx(h);
  return decide(ctx, i, j, r);
}

}  // namespace gtc

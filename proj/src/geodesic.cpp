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

#include "gtc/geodesic.hpp"

#include <algorithm>

namespace gtc {
namespace {

struct PortalPoint {
  Point2 p;
  int id;
};

// Adds reflex vertices that a straight leg passes through exactly, so the
// last-vertex anchor does not depend on the triangulation.
GeodesicPath with_touched_vertices(const SimplePolygon& poly, const GeodesicPath& in) {
  GeodesicPath out;
  for (size_t k = 0; k + 1 < in.waypoints.size(); ++k) {
    Point2 a = in.waypoints[k], b = in.waypoints[k + 1];
    out.waypoints.push_back(a);
    out.vertex_ids.push_back(in.vertex_ids[k]);
    std::vector<std::pair<double, int>> hits;
    Point2 d = b - a;
    for (int v = 0; v < poly.size(); ++v) {
      if (!poly.reflex(v) || v == in.vertex_ids[k] || v == in.vertex_ids[k + 1]) continue;
      Point2 p = poly[v];
      if (p == a || p == b || orientation(a, b, p) != 0) continue;
      double t = dot(p - a, d);
      if (t > 0.0 && t < dot(d, d)) hits.push_back({t, v});
    }
    std::sort(hits.begin(), hits.end());
    for (const auto& h : hits) {
      out.waypoints.push_back(poly[h.second]);
      out.vertex_ids.push_back(h.second);
    }
  }
  out.waypoints.push_back(in.waypoints.back());
  out.vertex_ids.push_back(in.vertex_ids.back());
  return out;
}

GeodesicPath funnel(const TriangulatedPolygon& tp, Point2 s, Point2 t, bool touch = true) {
  const SimplePolygon& poly = tp.polygon();
  int ts = tp.locate(s);
  int tt = tp.locate(t);
  std::vector<int> sleeve = tp.dual_path(ts, tt);
  // An endpoint lying on a portal belongs to the next triangle as well.
  auto on_portal = [&](int a, int b, Point2 x) {
    auto [r, l] = tp.portal(a, b);
    return orientation(poly[r], poly[l], x) == 0;
  };
  size_t lo = 0, hi = sleeve.size();
  while (hi - lo > 1 && on_portal(sleeve[lo], sleeve[lo + 1], s)) ++lo;
  while (hi - lo > 1 && on_portal(sleeve[hi - 2], sleeve[hi - 1], t)) --hi;
  sleeve = std::vector<int>(sleeve.begin() + static_cast<long>(lo), sleeve.begin() + static_cast<long>(hi));

  std::vector<PortalPoint> lefts, rights;
  lefts.reserve(sleeve.size() + 1);
  rights.reserve(sleeve.size() + 1);
  lefts.push_back({s, -1});
  rights.push_back({s, -1});
  for (size_t k = 0; k + 1 < sleeve.size(); ++k) {
    auto [r, l] = tp.portal(sleeve[k], sleeve[k + 1]);
    lefts.push_back({poly[l], l});
    rights.push_back({poly[r], r});
  }
  lefts.push_back({t, -1});
  rights.push_back({t, -1});

  GeodesicPath path;
  path.waypoints.push_back(s);
  path.vertex_ids.push_back(-1);

  PortalPoint apex = lefts[0], left = lefts[0], right = rights[0];
  size_t apex_index = 0, left_index = 0, right_index = 0;
  const size_t count = lefts.size();
  for (size_t i = 1; i < count; ++i) {
    const PortalPoint& L = lefts[i];
    const PortalPoint& R = rights[i];

    if (orientation(apex.p, right.p, R.p) >= 0) {
      if (apex.p == right.p || orientation(apex.p, left.p, R.p) < 0) {
        right = R;
        right_index = i;
      } else {
        apex = left;
        apex_index = left_index;
        path.waypoints.push_back(apex.p);
        path.vertex_ids.push_back(apex.id);
        left = right = apex;
        left_index = right_index = apex_index;
        i = apex_index;
        continue;
      }
    }

    if (orientation(apex.p, left.p, L.p) <= 0) {
      if (apex.p == left.p || orientation(apex.p, right.p, L.p) > 0) {
        left = L;
        left_index = i;
      } else {
        apex = right;
        apex_index = right_index;
        path.waypoints.push_back(apex.p);
        path.vertex_ids.push_back(apex.id);
        left = right = apex;
        left_index = right_index = apex_index;
        i = apex_index;
        continue;
      }
    }
  }
  path.waypoints.push_back(t);
  path.vertex_ids.push_back(-1);

  // Drop duplicates and bends that are not reflex polygon vertices.
  GeodesicPath clean;
  const double eps = poly.eps();
  for (size_t k = 0; k < path.waypoints.size(); ++k) {
    Point2 p = path.waypoints[k];
    int id = path.vertex_ids[k];
    bool last = k + 1 == path.waypoints.size();
    if (!clean.waypoints.empty() && near(clean.waypoints.back(), p, eps)) {
      if (last) {
        clean.waypoints.back() = p;
        clean.vertex_ids.back() = -1;
      }
      continue;
    }
    if (k > 0 && !last && (id < 0 || !poly.reflex(id))) continue;
    clean.waypoints.push_back(p);
    clean.vertex_ids.push_back(last ? -1 : id);
  }
  if (clean.waypoints.size() == 1) {
    clean.waypoints.push_back(t);
    clean.vertex_ids.push_back(-1);
  }
  if (touch) clean = with_touched_vertices(poly, clean);
  clean.length = 0.0;
  for (size_t k = 0; k + 1 < clean.waypoints.size(); ++k) {
    clean.length += dist(clean.waypoints[k], clean.waypoints[k + 1]);
  }
  return clean;
}

}  // namespace

GeodesicPath shortest_path(const TriangulatedPolygon& tp, Point2 s, Point2 t) { return funnel(tp, s, t); }

double geodesic_distance(const TriangulatedPolygon& tp, Point2 s, Point2 t) { return funnel(tp, s, t, false).length; }

AnchoredDistance anchored_distance(const TriangulatedPolygon& tp, Point2 s, Point2 t) {
  GeodesicPath p = funnel(tp, s, t);
  const size_t n = p.waypoints.size();
  AnchoredDistance out;
  out.distance = p.length;
  out.anchor = p.waypoints[n - 2];
  out.anchor_vertex = p.vertex_ids[n - 2];
  out.anchor_distance = p.length - dist(out.anchor, t);
  return out;
}

ShortestPathTree shortest_path_tree(const TriangulatedPolygon& tp, Point2 s) {
  const SimplePolygon& poly = tp.polygon();
  const int n = poly.size();
  ShortestPathTree spt;
  spt.source = s;
  spt.dist.resize(static_cast<size_t>(n));
  spt.parent.resize(static_cast<size_t>(n));
  spt.parent_vertex.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    GeodesicPath p = funnel(tp, s, poly[v]);
    const size_t w = p.waypoints.size();
    spt.dist[static_cast<size_t>(v)] = p.length;
    spt.parent[static_cast<size_t>(v)] = p.waypoints[w - 2];
    spt.parent_vertex[static_cast<size_t>(v)] = p.vertex_ids[w - 2];
  }
  return spt;
}

std::vector<SpmVertex> spm_vertices_of_tree(const TriangulatedPolygon& tp, const ShortestPathTree& spt) {
  const SimplePolygon& poly = tp.polygon();
  const int n = poly.size();
  const double eps = poly.eps();
  const double probe = 1e-7 * std::max(1.0, poly.diameter());
  std::vector<SpmVertex> out;
  for (int v = 0; v < n; ++v) out.push_back({poly[v], spt.dist[static_cast<size_t>(v)], v});
  for (int w = 0; w < n; ++w) {
    if (!poly.reflex(w)) continue;
    Point2 pw = poly[w];
    Point2 from = spt.parent[static_cast<size_t>(w)];
    if (dist(from, pw) <= eps) continue;
    Point2 d = unit(pw - from);
    if (point_in_polygon(poly, pw + probe * d) != Containment::kInside) continue;
    auto t = ray_cast(poly, pw, d, eps);
    if (!t) continue;
    out.push_back({pw + *t * d, spt.dist[static_cast<size_t>(w)] + *t, -1});
  }
  return out;
}

std::vector<SpmVertex> spm_vertices(const TriangulatedPolygon& tp, Point2 s) {
  return spm_vertices_of_tree(tp, shortest_path_tree(tp, s));
}

}  // namespace gtc

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

#include "gtc/disk.hpp"

#include <algorithm>
#include <iostream>

namespace gtc {
namespace {

constexpr double kAngleTol = 1e-12;

double scale_of(const TriangulatedPolygon& tp) { return std::max(1.0, tp.polygon().diameter()); }

void sort_unique(std::vector<double>& v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  v.swap(out);
}

// Relative ccw angle of x around an arc's start; > sweep means outside.
double rel_angle(const CircularArc& a, Point2 x) { return ccw_sweep(a.start, angle_of(x - a.anchor)); }

struct Anchor {
  Point2 w;
  double rho;
  double lo;
  double sweep;
  int vid;
};

Point2 arc_tangent_cw(double angle) { return {std::sin(angle), -std::cos(angle)}; }

BoundaryElement arc_element(const CircularArc& a) {
  BoundaryElement e;
  e.is_arc = true;
  e.arc = a;
  e.from = a.at(a.start + a.sweep);
  e.to = a.at(a.start);
  e.length = a.radius * a.sweep;
  return e;
}

BoundaryElement chain_element(Point2 a, Point2 b) {
  BoundaryElement e;
  e.from = a;
  e.to = b;
  e.length = dist(a, b);
  return e;
}

Point2 out_tangent(const BoundaryElement& e) {
  return e.is_arc ? arc_tangent_cw(e.arc.start + e.arc.sweep) : unit(e.to - e.from);
}

Point2 in_tangent(const BoundaryElement& e) { return e.is_arc ? arc_tangent_cw(e.arc.start) : unit(e.to - e.from); }

// Point at traversal distance s along an element.
Point2 element_at(const BoundaryElement& e, double s) {
  if (e.is_arc) return e.arc.at(e.arc.start + e.arc.sweep - s / e.arc.radius);
  return e.length > 0.0 ? lerp(e.from, e.to, s / e.length) : e.from;
}

// Follows pieces from `start` until the walk returns to its first point.
std::vector<size_t> trace(const std::vector<BoundaryElement>& pieces, std::vector<char>& used, size_t start, double tol) {
  std::vector<size_t> loop = {start};
  used[start] = 1;
  size_t cur = start;
  while (true) {
    const BoundaryElement& c = pieces[cur];
    if (loop.size() > 1 && near(c.to, pieces[start].from, tol)) break;
    double back_angle = angle_of(Point2{0, 0} - in_tangent(c));
    int best = -1;
    double best_turn = 0.0;
    for (size_t k = 0; k < pieces.size(); ++k) {
      if (used[k] || !near(pieces[k].from, c.to, tol)) continue;
      double turn = ccw_sweep(back_angle, angle_of(out_tangent(pieces[k])));
      if (turn < 1e-12) turn += kTwoPi;
      if (best < 0 || turn < best_turn) {
        best = static_cast<int>(k);
        best_turn = turn;
      }
    }
    if (best < 0) break;
    cur = static_cast<size_t>(best);
    used[cur] = 1;
    loop.push_back(cur);
  }
  return loop;
}

// Pieces into one closed clockwise walk. A region pinched at a point has a
// boundary made of loops through that point; later loops are spliced in
// where they touch the walk.
std::vector<BoundaryElement> link(std::vector<BoundaryElement> pieces, double tol) {
  std::vector<BoundaryElement> out;
  if (pieces.empty()) return out;
  std::vector<char> used(pieces.size(), 0);
  size_t first = 0;
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].is_arc) {
      first = k;
      break;
    }
  }
  std::vector<size_t> walk = trace(pieces, used, first, tol);
  while (std::count(used.begin(), used.end(), 0) > 0) {
    bool spliced = false;
    for (size_t p = 0; p < walk.size() && !spliced; ++p) {
      for (size_t k = 0; k < pieces.size(); ++k) {
        if (used[k] || !near(pieces[k].from, pieces[walk[p]].to, tol)) continue;
        std::vector<size_t> loop = trace(pieces, used, k, tol);
        walk.insert(walk.begin() + static_cast<long>(p) + 1, loop.begin(), loop.end());
        spliced = true;
        break;
      }
    }
    if (!spliced) break;
  }
  size_t left = 0;
  for (size_t k : walk) out.push_back(pieces[k]);
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (!used[k]) {
      ++left;
      out.push_back(pieces[k]);
    }
  }
  if (left > 0) std::cerr << "warning: disk intersection boundary left " << left << " unlinked pieces\n";
  return out;
}

}  // namespace

std::vector<CircularArc> geodesic_circle(const TriangulatedPolygon& tp, Point2 q, double r) {
  return geodesic_circle(tp, shortest_path_tree(tp, q), r);
}

std::vector<CircularArc> geodesic_circle(const TriangulatedPolygon& tp, const ShortestPathTree& spt, double r) {
  const SimplePolygon& P = tp.polygon();
  const int n = P.size();
  const double eps = P.eps();
  std::vector<Anchor> anchors;
  if (r > eps) anchors.push_back({spt.source, r, 0.0, kTwoPi, -1});
  for (int w = 0; w < n; ++w) {
    if (!P.reflex(w)) continue;
    double d = spt.dist[static_cast<size_t>(w)];
    Point2 parent = spt.parent[static_cast<size_t>(w)];
    if (d >= r - eps || dist(parent, P[w]) <= eps) continue;
    double beta = angle_of(parent - P[w]);
    double dir0 = wrap_angle(beta + kPi);
    double e_next = angle_of(P.vertex(w + 1) - P[w]);
    double e_prev = angle_of(P.vertex(w - 1) - P[w]);
    Anchor a{P[w], r - d, 0.0, 0.0, w};
    // The shadow lies on the side of the extension where the exterior is;
    // a parent along one of w's edges sends it to the other edge.
    if (ccw_sweep(dir0, e_prev) < kPi - kAngleTol) {
      a.lo = dir0;
      a.sweep = ccw_sweep(dir0, e_prev);
    } else if (ccw_sweep(e_next, dir0) < kPi - kAngleTol) {
      a.lo = e_next;
      a.sweep = ccw_sweep(e_next, dir0);
    } else {
      continue;
    }
    if (a.sweep > kAngleTol) anchors.push_back(a);
  }

  std::vector<CircularArc> out;
  for (const Anchor& a : anchors) {
    const bool full = a.sweep >= kTwoPi;
    std::vector<double> cuts = {0.0, a.sweep};
    for (int e = 0; e < n; ++e) {
      Point2 p = P[e], q = P.vertex(e + 1);
      for (double t : segment_circle_params(p, q, a.w, a.rho)) {
        double rel = ccw_sweep(a.lo, angle_of(lerp(p, q, t) - a.w));
        if (rel <= a.sweep) cuts.push_back(rel);
      }
    }
    for (int v = 0; v < n; ++v) {
      double dv = dist(P[v], a.w);
      if (dv <= eps || dv > a.rho + eps) continue;
      double rel = ccw_sweep(a.lo, angle_of(P[v] - a.w));
      if (rel <= a.sweep) cuts.push_back(rel);
    }
    sort_unique(cuts, kAngleTol);
    std::vector<std::pair<double, double>> kept;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      double u = cuts[k], v = cuts[k + 1];
      if (v - u <= kAngleTol) continue;
      Point2 x = a.w + a.rho * polar(a.lo + 0.5 * (u + v));
      if (point_in_polygon(P, x) == Containment::kOutside || !segment_inside(P, a.w, x)) continue;
      if (!kept.empty() && std::fabs(kept.back().second - u) <= kAngleTol) {
        kept.back().second = v;
      } else {
        kept.push_back({u, v});
      }
    }
    if (full && kept.size() > 1 && kept.front().first <= kAngleTol && kept.back().second >= kTwoPi - kAngleTol) {
      kept.front().first = kept.back().first - kTwoPi;
      kept.pop_back();
    }
    for (const auto& [u, v] : kept) {
      CircularArc arc;
      arc.anchor = a.w;
      arc.radius = a.rho;
      arc.start = wrap_angle(a.lo + u);
      arc.sweep = (full && u <= kAngleTol && v >= kTwoPi - kAngleTol) ? kTwoPi : v - u;
      arc.owner_point = spt.source;
      out.push_back(arc);
    }
  }
  return out;
}

double ArcBoundary::length() const {
  double l = 0.0;
  for (const auto& e : elements) l += e.length;
  return l;
}

bool ArcBoundary::has_arcs() const {
  for (const auto& e : elements) {
    if (e.is_arc) return true;
  }
  return false;
}

std::vector<double> ArcBoundary::offsets() const {
  std::vector<double> off;
  double acc = 0.0;
  for (const auto& e : elements) {
    off.push_back(acc);
    acc += e.length;
  }
  return off;
}

Point2 ArcBoundary::at(double param) const {
  if (elements.empty()) return center;
  double total = length();
  if (total > 0.0) {
    param = std::fmod(param, total);
    if (param < 0.0) param += total;
  }
  double acc = 0.0;
  for (const auto& e : elements) {
    if (param <= acc + e.length) return element_at(e, param - acc);
    acc += e.length;
  }
  return elements.back().to;
}

std::optional<ArcBoundary> disks_intersection(const GeodesicHull& h, const std::vector<Point2>& sites, double r) {
  if (sites.empty()) throw GeometryError("disk intersection without sites");
  const TriangulatedPolygon& tp = h.ambient();
  const double scale = scale_of(tp);
  const double tol = 1e-9 * scale;
  OneCenterResult oc = one_center(tp, sites);
  if (oc.radius > r + tol) return std::nullopt;
  ArcBoundary B;
  B.sites = sites;
  B.radius = r;
  B.center = oc.center;
  if (oc.radius >= r - tol) {
    B.point = true;
    return B;
  }

  const size_t ns = sites.size();
  std::vector<std::vector<CircularArc>> arcs(ns);
  for (size_t s = 0; s < ns; ++s) {
    arcs[s] = geodesic_circle(tp, sites[s], r);
    for (auto& a : arcs[s]) a.owner = static_cast<int>(s);
  }
  const auto& ring = h.ring();
  const size_t nr = ring.size();
  auto within_all = [&](Point2 x, size_t skip) {
    for (size_t s = 0; s < ns; ++s) {
      if (s == skip) continue;
      double d = geodesic_distance(tp, x, sites[s]);
      if (d > r + tol) return false;
      if (skip != ns && s < skip && d >= r - tol) return false;  // shared arc, the earlier site owns it
    }
    return true;
  };

  std::vector<BoundaryElement> pieces;
  for (size_t s = 0; s < ns; ++s) {
    for (const CircularArc& a : arcs[s]) {
      std::vector<double> cuts = {0.0, a.sweep};
      for (size_t s2 = 0; s2 < ns; ++s2) {
        if (s2 == s) continue;
        for (const CircularArc& b : arcs[s2]) {
          for (Point2 x : circle_circle(a.anchor, a.radius, b.anchor, b.radius)) {
            double rel = rel_angle(a, x);
            if (rel <= a.sweep) cuts.push_back(rel);
          }
        }
      }
      for (size_t k = 0; k < nr && nr > 1; ++k) {
        Point2 p = ring[k], q = ring[(k + 1) % nr];
        for (double t : segment_circle_params(p, q, a.anchor, a.radius)) {
          double rel = rel_angle(a, lerp(p, q, t));
          if (rel <= a.sweep) cuts.push_back(rel);
        }
      }
      sort_unique(cuts, kAngleTol);
      for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        double u = cuts[k], v = cuts[k + 1];
        if ((v - u) * a.radius <= 1e-12 * scale) continue;
        Point2 x = a.at(a.start + 0.5 * (u + v));
        if (h.contains(x) == Containment::kOutside || !within_all(x, s)) continue;
        CircularArc piece = a;
        piece.start = wrap_angle(a.start + u);
        piece.sweep = v - u;
        pieces.push_back(arc_element(piece));
      }
    }
  }
  // Hull boundary pieces that lie in every disk.
  for (size_t k = 0; k < nr && nr > 1; ++k) {
    Point2 p = ring[k], q = ring[(k + 1) % nr];
    if (dist(p, q) <= 1e-12 * scale) continue;
    std::vector<double> cuts = {0.0, 1.0};
    for (size_t s = 0; s < ns; ++s) {
      for (const CircularArc& a : arcs[s]) {
        for (double t : segment_circle_params(p, q, a.anchor, a.radius)) cuts.push_back(t);
      }
    }
    sort_unique(cuts, 1e-15);
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
      Point2 x0 = lerp(p, q, cuts[c]), x1 = lerp(p, q, cuts[c + 1]);
      if (dist(x0, x1) <= 1e-12 * scale) continue;
      if (!within_all(0.5 * (x0 + x1), ns)) continue;
      pieces.push_back(chain_element(x0, x1));
    }
  }
  B.elements = link(std::move(pieces), 1e-7 * scale);
  return B;
}

EventSet compute_events(const TriangulatedPolygon& tp, const ArcBoundary& boundary,
                        const std::vector<Point2>& interior, double ref_param) {
  const double scale = scale_of(tp);
  const double tol = 1e-9 * scale;
  const double r = boundary.radius;
  EventSet out;
  if (boundary.point || !boundary.has_arcs()) {
    Point2 c = boundary.point ? boundary.center : boundary.elements.front().from;
    out.breakpoints.push_back(c);
    for (size_t k = 0; k < interior.size(); ++k) {
      bool in = geodesic_distance(tp, c, interior[k]) <= r + tol;
      (in ? out.covers : out.disjoint).push_back(static_cast<int>(k));
    }
    return out;
  }

  const double L = boundary.length();
  const std::vector<double> offs = boundary.offsets();
  for (size_t e = 0; e < boundary.elements.size(); ++e) {
    const auto& el = boundary.elements[e];
    if (!el.is_arc) continue;
    out.breakpoints.push_back(el.from);
    out.breakpoints.push_back(el.to);
  }

  struct Sub {
    double p0, p1;  // global params
    Point2 x0, x1;
    bool inside;
  };
  for (size_t k = 0; k < interior.size(); ++k) {
    const Point2 q = interior[k];
    std::vector<CircularArc> qarcs = geodesic_circle(tp, q, r);
    std::vector<Sub> seq;
    for (size_t e = 0; e < boundary.elements.size(); ++e) {
      const auto& el = boundary.elements[e];
      if (!el.is_arc) continue;
      const CircularArc& a = el.arc;
      std::vector<double> cuts = {0.0, el.length};
      for (const CircularArc& b : qarcs) {
        for (Point2 x : circle_circle(a.anchor, a.radius, b.anchor, b.radius)) {
          double rel = rel_angle(a, x);
          if (rel > a.sweep) continue;
          cuts.push_back((a.sweep - rel) * a.radius);
        }
      }
      sort_unique(cuts, 1e-13 * scale);
      for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        double s0 = cuts[c], s1 = cuts[c + 1];
        if (s1 - s0 <= 1e-13 * scale) continue;
        Point2 mid = element_at(el, 0.5 * (s0 + s1));
        bool in = geodesic_distance(tp, mid, q) <= r;
        if (!seq.empty() && seq.back().inside == in && std::fabs(seq.back().p1 - (offs[e] + s0)) <= 1e-13 * scale) {
          seq.back().p1 = offs[e] + s1;
          seq.back().x1 = element_at(el, s1);
          continue;
        }
        seq.push_back({offs[e] + s0, offs[e] + s1, element_at(el, s0), element_at(el, s1), in});
      }
    }
    size_t n_in = 0;
    for (const auto& s : seq) n_in += s.inside ? 1 : 0;
    if (n_in == seq.size()) {
      out.covers.push_back(static_cast<int>(k));
      continue;
    }
    if (n_in == 0) {
      out.disjoint.push_back(static_cast<int>(k));
      continue;
    }
    // Rotate so the walk starts on an outside piece, then collect the runs.
    size_t rot = 0;
    while (seq[rot].inside) ++rot;
    std::rotate(seq.begin(), seq.begin() + static_cast<long>(rot), seq.end());
    struct Run {
      double p0, p1;
      Point2 x0, x1;
    };
    std::vector<Run> runs;
    for (size_t i = 0; i < seq.size(); ++i) {
      if (!seq[i].inside) continue;
      if (i > 0 && seq[i - 1].inside) {
        runs.back().p1 = seq[i].p1;
        runs.back().x1 = seq[i].x1;
      } else {
        runs.push_back({seq[i].p0, seq[i].p1, seq[i].x0, seq[i].x1});
      }
    }
    for (const auto& run : runs) {
      out.breakpoints.push_back(run.x0);
      out.breakpoints.push_back(run.x1);
    }
    size_t pick_in = 0, pick_out = runs.size() - 1;
    if (runs.size() > 1) {
      ++out.split_runs;
      // Keep the largest outside gap; the inside span is everything else.
      double best_gap = -1.0;
      for (size_t i = 0; i < runs.size(); ++i) {
        size_t nx = (i + 1) % runs.size();
        double gap = runs[nx].p0 - runs[i].p1;
        if (gap < 0.0) gap += L;
        if (gap > best_gap) {
          best_gap = gap;
          pick_out = i;
          pick_in = nx;
        }
      }
    }
    auto rel = [&](double p) {
      double v = std::fmod(p - ref_param, L);
      if (v < 0.0) v += L;
      if (v >= L - 1e-12 * scale) v = 0.0;
      return v;
    };
    out.events.push_back({runs[pick_in].x0, static_cast<int>(k), EventFlag::kIn, rel(runs[pick_in].p0)});
    out.events.push_back({runs[pick_out].x1, static_cast<int>(k), EventFlag::kOut, rel(runs[pick_out].p1)});
  }
  std::stable_sort(out.events.begin(), out.events.end(), [&](const Event& a, const Event& b) {
    if (std::fabs(a.param - b.param) > 1e-12 * scale) return a.param < b.param;
    return a.flag == EventFlag::kIn && b.flag == EventFlag::kOut;
  });
  return out;
}

ReferencePoint reference_point(const TriangulatedPolygon& tp, const ArcBoundary& boundary,
                               const std::vector<Point2>& interior) {
  if (boundary.point || !boundary.has_arcs()) throw NoArcs("boundary has no arcs");
  const double scale = scale_of(tp);
  const double L = boundary.length();
  const std::vector<double> offs = boundary.offsets();
  EventSet ev = compute_events(tp, boundary, interior, 0.0);
  std::vector<std::pair<double, double>> spans(interior.size(), {-1.0, -1.0});
  for (const Event& e : ev.events) {
    auto& s = spans[static_cast<size_t>(e.owner)];
    (e.flag == EventFlag::kIn ? s.first : s.second) = e.param;
  }
  std::vector<double> cands;
  for (size_t e = 0; e < boundary.elements.size(); ++e) {
    if (boundary.elements[e].is_arc) cands.push_back(offs[e]);
  }
  for (const auto& s : spans) {
    if (s.first >= 0.0) cands.push_back(s.first);
  }
  std::sort(cands.begin(), cands.end());
  const double tie = 1e-12 * scale;
  double best = cands.front();
  int best_bad = -1;
  for (double p : cands) {
    int bad = 0;
    for (const auto& [a, b] : spans) {
      if (a < 0.0) continue;
      double rel = std::fmod(p - a + L, L), span = std::fmod(b - a + L, L);
      if (rel > tie && rel <= span + tie) ++bad;
    }
    if (best_bad < 0 || bad < best_bad) {
      best_bad = bad;
      best = p;
    }
    if (bad == 0) break;
  }
  if (best_bad > 0) std::cerr << "warning: no clean reference point, " << best_bad << " owners straddle it\n";
  ReferencePoint ref;
  ref.param = best;
  ref.position = boundary.at(best);
  for (size_t e = 0; e < boundary.elements.size(); ++e) {
    if (offs[e] <= best + tie && best <= offs[e] + boundary.elements[e].length + tie) {
      ref.element = static_cast<int>(e);
      if (boundary.elements[e].is_arc) break;
    }
  }
  return ref;
}

}  // namespace gtc

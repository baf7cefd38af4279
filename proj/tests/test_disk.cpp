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

#include <gtest/gtest.h>

#include <algorithm>

#include "gtc/disk.hpp"
#include "gtc/oracle.hpp"
#include "support.hpp"

namespace gtc {
namespace {

using testing::ell6;
using testing::qsym;
using testing::rel_err;
using testing::square4;
using testing::tri;

std::shared_ptr<const TriangulatedPolygon> shared(const std::vector<Point2>& v) {
  return std::make_shared<const TriangulatedPolygon>(SimplePolygon(v));
}

// Dense polyline of a boundary, for crossing-parity membership.
std::vector<Point2> sample_boundary(const ArcBoundary& b, int per_arc) {
  std::vector<Point2> out;
  for (const auto& e : b.elements) {
    if (!e.is_arc) {
      out.push_back(e.from);
      continue;
    }
    for (int k = 0; k < per_arc; ++k) out.push_back(e.arc.at(e.arc.start + e.arc.sweep * (1.0 - k / double(per_arc))));
  }
  return out;
}

bool inside_polyline(const std::vector<Point2>& ring, Point2 x) {
  bool in = false;
  for (size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    if ((ring[i].y > x.y) != (ring[j].y > x.y)) {
      double xc = ring[j].x + (x.y - ring[j].y) * (ring[i].x - ring[j].x) / (ring[i].y - ring[j].y);
      if (x.x < xc) in = !in;
    }
  }
  return in;
}

TEST(DiskContains, Examples) {
  auto sq = tri(square4());
  auto l6 = tri(ell6());
  EXPECT_TRUE(disk_contains(sq, {1, 1}, 1.0, {1, 2}));
  EXPECT_FALSE(disk_contains(l6, {3, 1}, 2.0, {1, 3}));
  EXPECT_TRUE(disk_contains(l6, {3, 1}, 3.0, {1, 3}));
}

TEST(GeodesicCircle, Examples) {
  auto sq = tri(square4());
  auto arcs = geodesic_circle(sq, Point2{2, 2}, 1.0);
  ASSERT_EQ(arcs.size(), 1u);
  EXPECT_TRUE(arcs[0].full());
  EXPECT_EQ(arcs[0].anchor, (Point2{2, 2}));
  EXPECT_DOUBLE_EQ(arcs[0].radius, 1.0);

  auto l6 = tri(ell6());
  arcs = geodesic_circle(l6, Point2{3, 1}, 2.0);
  bool bend = false;
  for (const auto& a : arcs) {
    if (a.anchor == Point2{2, 2}) {
      bend = true;
      EXPECT_NEAR(a.radius, 2.0 - std::sqrt(2.0), 1e-12);
    }
  }
  EXPECT_TRUE(bend);

  // Circle of radius 2 around (1,1) leaves the square through x = 0 and y = 0:
  // 1 + 2cos(t) = 0 and 1 + 2sin(t) = 0 bound the part that stays inside.
  arcs = geodesic_circle(sq, Point2{1, 1}, 2.0);
  ASSERT_EQ(arcs.size(), 1u);
  double lo = -std::asin(0.5), hi = std::acos(-0.5);
  EXPECT_NEAR(arcs[0].start, wrap_angle(lo), 1e-12);
  EXPECT_NEAR(arcs[0].sweep, hi - lo, 1e-12);
}

TEST(GeodesicCircle, SamplesAtExactDistance) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = testing::random_instance(seed, 10 + static_cast<int>(seed % 20), 1);
    auto tp = tri(inst.polygon);
    VisibilityGraph vg(tp.polygon());
    Point2 q = inst.points[0];
    auto field = vg.field(q);
    double r = 0.35 * tp.polygon().diameter();
    auto arcs = geodesic_circle(tp, q, r);
    EXPECT_FALSE(arcs.empty());
    for (const auto& a : arcs) {
      for (int k = 0; k <= 8; ++k) {
        Point2 x = a.at(a.start + a.sweep * k / 8.0);
        EXPECT_NE(point_in_polygon(tp.polygon(), x), Containment::kOutside);
        EXPECT_NEAR(vg.distance(field, x), r, 1e-9 * r) << "seed " << seed;
      }
    }
  }
}

// Every point at distance r lies on one of the arcs: walk r along paths to
// sampled far points.
TEST(GeodesicCircle, CoversEveryPointAtDistance) {
  int hits = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = testing::random_instance(seed, 10 + static_cast<int>(seed % 20), 1);
    auto tp = tri(inst.polygon);
    Point2 q = inst.points[0];
    double r = 0.35 * tp.polygon().diameter();
    auto arcs = geodesic_circle(tp, q, r);
    Rng rng(seed + 100);
    for (Point2 x : sample_points(inst.polygon, 60, rng)) {
      auto p = shortest_path(tp, q, x);
      if (p.length <= r * (1 + 1e-6)) continue;
      double acc = 0.0;
      Point2 y;
      for (size_t k = 0; k + 1 < p.waypoints.size(); ++k) {
        double l = dist(p.waypoints[k], p.waypoints[k + 1]);
        if (acc + l >= r) {
          y = lerp(p.waypoints[k], p.waypoints[k + 1], (r - acc) / l);
          break;
        }
        acc += l;
      }
      double best = 1e18;
      for (const auto& a : arcs) {
        double ang = angle_of(y - a.anchor);
        double rel = ccw_sweep(a.start, ang);
        if (rel <= a.sweep + 1e-9 || a.full()) best = std::min(best, std::fabs(dist(y, a.anchor) - a.radius));
      }
      EXPECT_LT(best, 1e-7 * r) << "seed " << seed;
      ++hits;
    }
  }
  EXPECT_GT(hits, 200);
}

TEST(DisksIntersection, Examples) {
  auto h = geodesic_hull(shared(square4()), qsym());
  auto pt = disks_intersection(h, {{1, 1}, {1, 3}}, 1.0);
  ASSERT_TRUE(pt.has_value());
  EXPECT_TRUE(pt->point);
  EXPECT_NEAR(pt->center.x, 1.0, 1e-9);
  EXPECT_NEAR(pt->center.y, 2.0, 1e-9);

  auto lens = disks_intersection(h, {{1, 1}, {1, 3}}, 1.25);
  ASSERT_TRUE(lens.has_value());
  EXPECT_FALSE(lens->point);
  std::vector<int> owners;
  bool tip = false;
  for (const auto& e : lens->elements) {
    if (!e.is_arc) {
      EXPECT_NEAR(e.from.x, 1.0, 1e-12);  // the hull side x = 1
      continue;
    }
    owners.push_back(e.arc.owner);
    for (Point2 p : {e.from, e.to}) tip = tip || (std::fabs(p.x - 1.75) < 1e-9 && std::fabs(p.y - 2.0) < 1e-9);
  }
  std::sort(owners.begin(), owners.end());
  EXPECT_EQ(owners, (std::vector<int>{0, 1}));
  EXPECT_TRUE(tip);
  // Closed clockwise walk.
  for (size_t k = 0; k < lens->elements.size(); ++k) {
    const auto& a = lens->elements[k];
    const auto& b = lens->elements[(k + 1) % lens->elements.size()];
    EXPECT_LT(dist(a.to, b.from), 1e-7);
  }

  EXPECT_FALSE(disks_intersection(h, {{1, 1}, {3, 3}}, 1.0).has_value());
}

TEST(DisksIntersection, MembershipAgreesWithDistances) {
  int checked = 0;
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    auto inst = testing::random_instance(seed, 14, 7);
    auto tp = shared(inst.polygon);
    auto h = geodesic_hull(tp, inst.points);
    std::vector<Point2> sites(inst.points.begin(), inst.points.begin() + 3);
    double r = 1.15 * one_center(*tp, sites).radius;
    auto B = disks_intersection(h, sites, r);
    ASSERT_TRUE(B.has_value());
    ASSERT_FALSE(B->point);
    auto ring = sample_boundary(*B, 256);
    Rng rng(seed);
    auto pts = sample_points(inst.polygon, 100, rng);
    for (Point2 x : pts) {
      double far = 0.0;
      for (Point2 s : sites) far = std::max(far, geodesic_distance(*tp, x, s));
      Containment hc = h.contains(x);
      if (std::fabs(far - r) < 1e-3 * r || hc == Containment::kBoundary) continue;
      bool expect = far <= r && hc == Containment::kInside;
      // Stay clear of the sampled boundary's chord error.
      double clear = 1e9;
      for (size_t k = 0; k < ring.size(); ++k) clear = std::min(clear, point_segment_distance(x, ring[k], ring[(k + 1) % ring.size()]));
      if (clear < 1e-3 * r) continue;
      EXPECT_EQ(inside_polyline(ring, x), expect) << "seed " << seed << " at " << x.x << "," << x.y;
      ++checked;
    }
  }
  EXPECT_GT(checked, 600);
}

// Pinched hulls give boundaries made of several loops through one point;
// the walk must still close.
TEST(DisksIntersection, WalkClosesOnRandomHulls) {
  int walks = 0;
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    auto inst = testing::random_instance(seed, 12 + static_cast<int>(seed % 10), 7);
    auto tp = shared(inst.polygon);
    auto h = geodesic_hull(tp, inst.points);
    const double top = one_center(*tp, inst.points).radius;
    for (int a = 0; a < h.k(); ++a) {
      for (int len = 1; len < h.k(); ++len) {
        std::vector<Point2> sites;
        for (int q : chain_points(h, a, a + len - 1)) sites.push_back(inst.points[static_cast<size_t>(q)]);
        for (int s = 2; s <= 6; s += 2) {
          auto B = disks_intersection(h, sites, top * s / 6.0);
          if (!B || B->point) continue;
          const size_t n = B->elements.size();
          for (size_t e = 0; e < n; ++e) {
            EXPECT_LT(dist(B->elements[e].to, B->elements[(e + 1) % n].from), 1e-6) << "seed " << seed;
          }
          ++walks;
        }
      }
    }
  }
  EXPECT_GT(walks, 50);
}

// Sign changes of d(., other) - r along every arc of the circle around s.
int crossing_count(const TriangulatedPolygon& tp, Point2 s, Point2 other, double r) {
  const double step = 1e-3 * tp.polygon().diameter();
  int changes = 0;
  for (const auto& a : geodesic_circle(tp, s, r)) {
    int n = std::max(2, static_cast<int>(std::ceil(a.radius * a.sweep / step)));
    int prev = 0;
    for (int k = 0; k <= n; ++k) {
      double f = geodesic_distance(tp, a.at(a.start + a.sweep * k / n), other) - r;
      int sg = f > 1e-9 ? 1 : (f < -1e-9 ? -1 : 0);
      if (sg != 0 && prev != 0 && sg != prev) ++changes;
      if (sg != 0) prev = sg;
    }
  }
  return changes;
}

TEST(PseudoDisk, AtMostTwoCrossings) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = testing::random_instance(seed, 16, 2);
    auto tp = tri(inst.polygon);
    double d = geodesic_distance(tp, inst.points[0], inst.points[1]);
    double r = 0.6 * d + 0.1 * tp.polygon().diameter();
    EXPECT_LE(crossing_count(tp, inst.points[0], inst.points[1], r), 2) << "seed " << seed;
  }
}

TEST(ComputeEvents, Examples) {
  auto h = geodesic_hull(shared(square4()), qsym());
  auto B = disks_intersection(h, {{1, 1}}, 1.0);
  ASSERT_TRUE(B.has_value());
  ASSERT_TRUE(B->elements.front().is_arc);
  // The only arc runs clockwise from (1,2) to (2,1); the circle around
  // (2.2,1) meets it at x = 1.6, y = 1 + sqrt(1 - 0.6^2).
  auto ev = compute_events(h.ambient(), *B, {{2.2, 1}, {1.2, 1.2}, {3, 3}}, 0.0);
  ASSERT_EQ(ev.events.size(), 2u);
  EXPECT_EQ(ev.events[0].flag, EventFlag::kIn);
  EXPECT_NEAR(ev.events[0].position.x, 1.6, 1e-9);
  EXPECT_NEAR(ev.events[0].position.y, 1.8, 1e-9);
  EXPECT_NEAR(ev.events[0].param, kPi / 2 - std::atan2(0.8, 0.6), 1e-9);
  EXPECT_EQ(ev.events[1].flag, EventFlag::kOut);
  EXPECT_NEAR(ev.events[1].position.x, 2.0, 1e-9);
  EXPECT_NEAR(ev.events[1].position.y, 1.0, 1e-9);
  EXPECT_EQ(ev.covers, (std::vector<int>{1}));
  EXPECT_EQ(ev.disjoint, (std::vector<int>{2}));
}

TEST(ComputeEvents, PairsAreInsideBetween) {
  int pairs = 0;
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    auto inst = testing::random_instance(seed, 14, 8);
    auto tp = shared(inst.polygon);
    auto h = geodesic_hull(tp, inst.points);
    std::vector<Point2> sites(inst.points.begin(), inst.points.begin() + 2);
    std::vector<Point2> interior(inst.points.begin() + 2, inst.points.end());
    double r = 0.75 * one_center(*tp, inst.points).radius;
    auto B = disks_intersection(h, sites, r);
    if (!B || B->point) continue;
    auto ref = reference_point(*tp, *B, interior);
    auto ev = compute_events(*tp, *B, interior, ref.param);
    EXPECT_EQ(ev.split_runs, 0);
    const double L = B->length();
    std::vector<double> in(interior.size(), -1.0), out(interior.size(), -1.0);
    for (const auto& e : ev.events) (e.flag == EventFlag::kIn ? in : out)[static_cast<size_t>(e.owner)] = e.param;
    for (size_t q = 0; q < interior.size(); ++q) {
      if (in[q] < 0.0) continue;
      ASSERT_GE(out[q], 0.0);
      // The reference point comes first, so In precedes Out.
      EXPECT_LE(in[q], out[q] + 1e-9);
      ++pairs;
      for (int k = 1; k < 16; ++k) {
        double p = in[q] + (out[q] - in[q]) * k / 16.0;
        // Chain pieces are not part of the arc set; skip samples on them.
        double acc = 0.0, pos = std::fmod(p + ref.param, L);
        bool on_arc = false;
        for (const auto& e : B->elements) {
          if (pos >= acc && pos <= acc + e.length) on_arc = e.is_arc;
          acc += e.length;
        }
        if (!on_arc) continue;
        EXPECT_LE(geodesic_distance(*tp, B->at(p + ref.param), interior[q]), r + 1e-9) << "seed " << seed;
      }
    }
  }
  EXPECT_GT(pairs, 5);
}

TEST(ReferencePoint, Examples) {
  auto h = geodesic_hull(shared(square4()), qsym());
  auto lens = disks_intersection(h, {{1, 1}, {1, 3}}, 1.25);
  ASSERT_TRUE(lens.has_value());
  std::vector<Point2> interior = {{1.6, 2.0}, {1.2, 1.4}};
  auto ref = reference_point(h.ambient(), *lens, interior);
  ASSERT_GE(ref.element, 0);
  EXPECT_TRUE(lens->elements[static_cast<size_t>(ref.element)].is_arc);
  auto ev = compute_events(h.ambient(), *lens, interior, ref.param);
  for (size_t q = 0; q < interior.size(); ++q) {
    double a = -1, b = -1;
    for (const auto& e : ev.events) {
      if (e.owner != static_cast<int>(q)) continue;
      (e.flag == EventFlag::kIn ? a : b) = e.param;
    }
    if (a >= 0.0) EXPECT_LE(a, b);
  }
  auto pt = disks_intersection(h, {{1, 1}, {1, 3}}, 1.0);
  EXPECT_THROW(reference_point(h.ambient(), *pt, interior), NoArcs);
}

TEST(OneCenter, Examples) {
  auto sq = tri(square4());
  auto l6 = tri(ell6());
  auto one = one_center(sq, {{1, 1}});
  EXPECT_EQ(one.radius, 0.0);
  EXPECT_EQ(one.center, (Point2{1, 1}));

  auto bent = one_center(l6, {{3, 1}, {1, 3}});
  EXPECT_NEAR(bent.radius, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(bent.center.x, 2.0, 1e-12);
  EXPECT_NEAR(bent.center.y, 2.0, 1e-12);

  auto right = one_center(sq, {{1, 1}, {3, 1}, {1, 3}});
  EXPECT_NEAR(right.radius, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(right.center.x, 2.0, 1e-9);
  EXPECT_NEAR(right.center.y, 2.0, 1e-9);
}

TEST(OneCenter, MatchesOracleAndDeterminators) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = testing::random_instance(seed, 8 + static_cast<int>(seed % 22), 2 + static_cast<int>(seed % 9));
    auto tp = tri(inst.polygon);
    auto res = one_center(tp, inst.points);
    auto ora = oracle_one_center(tp.polygon(), inst.points);
    EXPECT_LE(rel_err(res.radius, ora.radius), 1e-4) << "seed " << seed;
    ASSERT_GE(res.determinators.size(), 2u);
    ASSERT_LE(res.determinators.size(), 3u);
    double far = 0.0;
    for (Point2 p : inst.points) far = std::max(far, geodesic_distance(tp, res.center, p));
    EXPECT_NEAR(far, res.radius, 1e-7);
    for (int d : res.determinators) {
      EXPECT_NEAR(geodesic_distance(tp, res.center, inst.points[static_cast<size_t>(d)]), res.radius, 1e-7);
    }
  }
}

}  // namespace
}  // namespace gtc

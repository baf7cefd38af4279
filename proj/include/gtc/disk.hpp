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

#ifndef GTC_DISK_HPP
#define GTC_DISK_HPP

#include <optional>
#include <vector>

#include "gtc/hull.hpp"

namespace gtc {

bool disk_contains(const TriangulatedPolygon& tp, Point2 c, double r, Point2 x);

// Piece of a Euclidean circle around `anchor`, covering the ccw angles
// [start, start + sweep].
struct CircularArc {
  Point2 anchor;
  double radius = 0.0;
  double start = 0.0;
  double sweep = 0.0;
  int owner = -1;  // index into the site list
  Point2 owner_point;

  Point2 at(double angle) const { return anchor + radius * polar(angle); }
  bool full() const { return sweep >= kTwoPi; }
};

std::vector<CircularArc> geodesic_circle(const TriangulatedPolygon& tp, Point2 q, double r);
std::vector<CircularArc> geodesic_circle(const TriangulatedPolygon& tp, const ShortestPathTree& spt, double r);

// One piece of the boundary of an intersection of equal disks, oriented
// clockwise. Arcs run from angle start + sweep down to start.
struct BoundaryElement {
  bool is_arc = false;
  CircularArc arc;
  Point2 from, to;
  double length = 0.0;
};

struct ArcBoundary {
  std::vector<BoundaryElement> elements;  // one closed clockwise walk
  std::vector<Point2> sites;
  double radius = 0.0;
  bool point = false;  // the intersection is a single point
  Point2 center;        // that point, or the one-center of the sites

  double length() const;
  bool has_arcs() const;
  // Position at clockwise arc length `param` from elements[0].from.
  Point2 at(double param) const;
  // Arc length parameter of each element's start.
  std::vector<double> offsets() const;
};

// Intersection of the radius-r disks around `sites`, restricted to the hull.
std::optional<ArcBoundary> disks_intersection(const GeodesicHull& h, const std::vector<Point2>& sites, double r);

enum class EventFlag { kIn, kOut };

struct Event {
  Point2 position;
  int owner = -1;  // index into the interior list passed to compute_events
  EventFlag flag = EventFlag::kIn;
  double param = 0.0;  // clockwise from the reference point
};

struct EventSet {
  std::vector<Event> events;  // sorted by param, In before Out on ties
  std::vector<int> covers;    // owners whose disk holds every arc
  std::vector<int> disjoint;  // owners whose disk misses every arc
  // Every position along the arcs where membership of some owner changes,
  // plus the arc endpoints.
  std::vector<Point2> breakpoints;
  int split_runs = 0;  // owners whose inside part was not one run
};

EventSet compute_events(const TriangulatedPolygon& tp, const ArcBoundary& boundary,
                        const std::vector<Point2>& interior, double ref_param);

struct NoArcs : GeometryError {
  using GeometryError::GeometryError;
};

struct ReferencePoint {
  Point2 position;
  double param = 0.0;
  int element = -1;
};

// A point on the arcs from which every owner's In event precedes its Out
// event when walking clockwise.
ReferencePoint reference_point(const TriangulatedPolygon& tp, const ArcBoundary& boundary,
                               const std::vector<Point2>& interior);

struct OneCenterResult {
  Point2 center;
  double radius = 0.0;
  std::vector<int> determinators;  // indices into the input
};

OneCenterResult one_center(const TriangulatedPolygon& tp, const std::vector<Point2>& S);

// Point x with d(x,a) = d(x,b) = d(x,c), if the root iteration finds one.
std::optional<Point2> equalization_point(const TriangulatedPolygon& tp, Point2 a, Point2 b, Point2 c);

}  // namespace gtc

#endif  // GTC_DISK_HPP

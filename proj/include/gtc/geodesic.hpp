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

#ifndef GTC_GEODESIC_HPP
#define GTC_GEODESIC_HPP

#include <vector>

#include "gtc/polygon.hpp"

namespace gtc {

struct GeodesicPath {
  std::vector<Point2> waypoints;
  std::vector<int> vertex_ids;  // polygon vertex per waypoint, -1 for endpoints
  double length = 0.0;
};

// Funnel algorithm over the dual-tree sleeve between s and t.
GeodesicPath shortest_path(const TriangulatedPolygon& tp, Point2 s, Point2 t);
double geodesic_distance(const TriangulatedPolygon& tp, Point2 s, Point2 t);

// Distance together with the last waypoint before t (the anchor whose
// Euclidean circle carries t locally).
struct AnchoredDistance {
  double distance = 0.0;
  Point2 anchor;
  int anchor_vertex = -1;
  double anchor_distance = 0.0;
};
AnchoredDistance anchored_distance(const TriangulatedPolygon& tp, Point2 s, Point2 t);

struct ShortestPathTree {
  Point2 source;
  std::vector<double> dist;         // per polygon vertex
  std::vector<Point2> parent;       // predecessor waypoint per vertex
  std::vector<int> parent_vertex;   // -1 when the predecessor is the source
};

ShortestPathTree shortest_path_tree(const TriangulatedPolygon& tp, Point2 s);

struct SpmVertex {
  Point2 position;
  double distance = 0.0;
  int vertex = -1;  // polygon vertex id, -1 for an extension hit
};

std::vector<SpmVertex> spm_vertices(const TriangulatedPolygon& tp, Point2 s);
std::vector<SpmVertex> spm_vertices_of_tree(const TriangulatedPolygon& tp, const ShortestPathTree& spt);

}  // namespace gtc

#endif  // GTC_GEODESIC_HPP

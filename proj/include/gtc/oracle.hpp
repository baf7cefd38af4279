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

// Brute-force references. Nothing here calls the funnel code.

#ifndef GTC_ORACLE_HPP
#define GTC_ORACLE_HPP

#include <vector>

#include "gtc/polygon.hpp"

namespace gtc {

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Visibility graph over the polygon vertices.
class VisibilityGraph {
 public:
  explicit VisibilityGraph(const SimplePolygon& poly);

  const SimplePolygon& polygon() const { return poly_; }
  bool visible(int u, int v) const { return vis_[static_cast<size_t>(u * n_ + v)] != 0; }

  // Dijkstra distances from s to every vertex, with predecessors (-1 = s).
  struct Field {
    Point2 source;
    std::vector<double> dist;
    std::vector<int> pred;
  };
  Field field(Point2 s) const;

  // Distance from the field source to x; anchor receives the last vertex
  // (or the source) of the path.
  double distance(const Field& f, Point2 x, Point2* anchor = nullptr) const;
  // Waypoints of the shortest path from the field source to x.
  std::vector<Point2> path(const Field& f, Point2 x) const;

 private:
  SimplePolygon poly_;
  int n_ = 0;
  std::vector<char> vis_;
};

double oracle_distance(const SimplePolygon& poly, Point2 s, Point2 t);

struct OracleConfig {
  int grid_resolution = 256;
  int refinement_rounds = 6;
  int sample_budget = 0;  // 0 = unbounded
};

struct OracleCenter {
  Point2 center;
  double radius = 0.0;
};

OracleCenter oracle_one_center(const SimplePolygon& poly, const std::vector<Point2>& S,
                               const OracleConfig& cfg = {});

struct OracleTwoCenter {
  Point2 c1, c2;
  double radius = 0.0;
  std::vector<int> assignment;  // 1 or 2 per point
  double candidate_radius = 0.0;  // best radius among subsets of size <= 3
  bool consistent = false;
};

OracleTwoCenter oracle_two_center(const SimplePolygon& poly, const std::vector<Point2>& Q,
                                  const OracleConfig& cfg = {});

// Same search over the splits that put every point with forced[q] == 1 on
// side 1 and forced[q] == 2 on side 2 (0 = free).
OracleTwoCenter oracle_two_center_restricted(const SimplePolygon& poly, const std::vector<Point2>& Q,
                                             const std::vector<int>& forced, const OracleConfig& cfg = {});

}  // namespace gtc

#endif  // GTC_ORACLE_HPP

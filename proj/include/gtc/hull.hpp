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

#ifndef GTC_HULL_HPP
#define GTC_HULL_HPP

#include <memory>
#include <vector>

#include "gtc/geodesic.hpp"

namespace gtc {

struct HullError : GeometryError {
  using GeometryError::GeometryError;
};

// Relative convex hull of a point set inside the ambient polygon. The
// boundary is a clockwise, possibly weakly simple, closed walk.
class GeodesicHull {
 public:
  GeodesicHull() = default;

  const TriangulatedPolygon& ambient() const { return *ambient_; }
  std::shared_ptr<const TriangulatedPolygon> ambient_ptr() const { return ambient_; }
  const std::vector<Point2>& points() const { return points_; }

  // Extreme labels in clockwise order, as indices into points().
  const std::vector<int>& extremes() const { return extremes_; }
  int k() const { return static_cast<int>(extremes_.size()); }
  Point2 extreme(int i) const;  // label taken mod k
  int extreme_index(int i) const;
  // Q minus the extremes; includes points on straight boundary stretches.
  const std::vector<int>& interior_points() const { return interior_; }
  const std::vector<int>& boundary_points() const { return on_boundary_; }
  bool is_extreme(int q) const { return label_of_[static_cast<size_t>(q)] >= 0; }
  int label_of(int q) const { return label_of_[static_cast<size_t>(q)]; }

  // boundary()[i] runs from extreme i to extreme i+1.
  const std::vector<GeodesicPath>& boundary() const { return boundary_; }
  const std::vector<Point2>& ring() const { return ring_; }
  // Clockwise arc length of ring()[s] from extreme 0.
  const std::vector<double>& ring_param() const { return ring_param_; }
  double perimeter() const { return perimeter_; }
  double extreme_param(int i) const;

  Containment contains(Point2 x) const;
  double eps() const { return ambient_->polygon().eps(); }

  // Ring parameter of the first exit of the ray from x along d.
  std::optional<double> exit_param(Point2 x, Point2 d) const;
  Point2 ring_point(double param) const;

  friend GeodesicHull geodesic_hull(std::shared_ptr<const TriangulatedPolygon> tp, const std::vector<Point2>& Q);

 private:
  std::shared_ptr<const TriangulatedPolygon> ambient_;
  std::vector<Point2> points_;
  std::vector<int> extremes_;
  std::vector<int> interior_;
  std::vector<int> on_boundary_;
  std::vector<int> label_of_;
  std::vector<GeodesicPath> boundary_;
  std::vector<Point2> ring_;
  std::vector<double> ring_param_;
  std::vector<int> ring_of_extreme_;
  double perimeter_ = 0.0;
};

GeodesicHull geodesic_hull(std::shared_ptr<const TriangulatedPolygon> tp, const std::vector<Point2>& Q);
GeodesicHull geodesic_hull(const TriangulatedPolygon& tp, const std::vector<Point2>& Q);

// Side of s relative to the extended geodesic through v and w:
// +1 left, -1 right, 0 on it. `beyond` is set when s lies past w.
int geodesic_side(const TriangulatedPolygon& tp, Point2 v, Point2 w, Point2 s, bool* beyond = nullptr);

struct ChainPair {
  int i = 0;
  int j = 1;
  friend bool operator==(const ChainPair& a, const ChainPair& b) { return a.i == b.i && a.j == b.j; }
};

// Labels a, a+1, ..., b (mod k).
std::vector<int> chain_extremes(const GeodesicHull& h, int a, int b);
// Q indices of the extremes on the chain from label a to label b.
std::vector<int> chain_points(const GeodesicHull& h, int a, int b);

// Weakly simple region bounded by the clockwise boundary from label a to
// label b followed by the geodesic back from b to a.
struct Subpolygon {
  std::vector<Point2> ring;
  double area = 0.0;  // absolute
  bool degenerate = false;
};
Subpolygon subpolygon(const GeodesicHull& h, int a, int b);

// Radius of the smallest geodesic disk holding the chain from a to b.
double chain_radius(const GeodesicHull& h, int a, int b);

}  // namespace gtc

#endif  // GTC_HULL_HPP

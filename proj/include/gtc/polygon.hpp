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

#ifndef GTC_POLYGON_HPP
#define GTC_POLYGON_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "gtc/geometry.hpp"

namespace gtc {

struct InvalidPolygon : GeometryError {
  using GeometryError::GeometryError;
};

struct PointOutsidePolygon : GeometryError {
  using GeometryError::GeometryError;
};

enum class Containment { kInside, kBoundary, kOutside };

// Counterclockwise simple polygon. The constructor validates and normalizes
// (merges near-duplicate consecutive vertices, reverses clockwise input).
class SimplePolygon {
 public:
  SimplePolygon() = default;
  // base_eps is scaled by max(1, diameter/100) into eps().
  explicit SimplePolygon(std::vector<Point2> vertices, double base_eps = kEpsGeom);

  const std::vector<Point2>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Point2& operator[](int i) const { return vertices_[static_cast<size_t>(i)]; }
  Point2 vertex(int i) const;  // index taken mod n
  bool reflex(int i) const { return reflex_[static_cast<size_t>(i)]; }

  bool was_reversed() const { return reversed_; }
  double diameter() const { return diameter_; }
  double eps() const { return eps_; }
  double area() const;

 private:
  std::vector<Point2> vertices_;
  std::vector<bool> reflex_;
  bool reversed_ = false;
  double diameter_ = 0.0;
  double eps_ = kEpsGeom;
};

Containment point_in_polygon(const SimplePolygon& poly, Point2 x);

// Closed segment ab lies in the closed polygon.
bool segment_inside(const SimplePolygon& poly, Point2 a, Point2 b);

// First hit of the ray o + t*d (t > tmin) with the boundary; returns t.
std::optional<double> ray_cast(const SimplePolygon& poly, Point2 o, Point2 d, double tmin);

class TriangulatedPolygon {
 public:
  TriangulatedPolygon() = default;
  explicit TriangulatedPolygon(SimplePolygon poly);

  const SimplePolygon& polygon() const { return poly_; }
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
  // neighbor(t)[k] is the triangle across edge (v[k], v[k+1]), or -1.
  const std::array<int, 3>& neighbors(int t) const { return nbrs_[static_cast<size_t>(t)]; }
  int dual_edge_count() const;

  // Triangle containing x (tolerant to eps). Throws PointOutsidePolygon.
  int locate(Point2 x) const;
  // Triangles from a to b along the dual tree, inclusive.
  std::vector<int> dual_path(int a, int b) const;
  // Shared edge of adjacent triangles a, b as (right, left) vertex ids
  // when crossing from a into b.
  std::pair<int, int> portal(int a, int b) const;

 private:
  SimplePolygon poly_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<std::array<int, 3>> nbrs_;
  std::vector<std::int32_t> next_hop_;  // next_hop_[a * T + b]
};

}  // namespace gtc

#endif  // GTC_POLYGON_HPP

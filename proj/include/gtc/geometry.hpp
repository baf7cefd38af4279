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

#ifndef GTC_GEOMETRY_HPP
#define GTC_GEOMETRY_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Absolute tolerance for coordinates of order 100.
inline constexpr double kEpsGeom = 1e-9;
inline constexpr double kEpsRel = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Point2 a, Point2 b) { return !(a == b); }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline Point2 lerp(Point2 a, Point2 b, double t) { return a + t * (b - a); }
inline bool near(Point2 a, Point2 b, double eps) { return dist(a, b) <= eps; }

inline Point2 unit(Point2 a) {
  double l = norm(a);
  return l > 0.0 ? a / l : Point2{0.0, 0.0};
}

inline Point2 polar(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Angle in [0, 2pi).
inline double angle_of(Point2 d) {
  double a = std::atan2(d.y, d.x);
  return a < 0.0 ? a + kTwoPi : a;
}

// Normalizes into [0, 2pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// Counterclockwise sweep from a to b, in [0, 2pi).
inline double ccw_sweep(double a, double b) { return wrap_angle(b - a); }

// Sign of twice the signed area of abc. Exact: falls back to expansion
// arithmetic when the double evaluation is inside its error bound.
int orientation(Point2 a, Point2 b, Point2 c);

// Same sign convention, but collinear within eps * scale counts as 0.
int orientation_tol(Point2 a, Point2 b, Point2 c, double eps);

double point_segment_distance(Point2 p, Point2 a, Point2 b);
Point2 closest_on_segment(Point2 p, Point2 a, Point2 b);

// Exact test whether closed segments ab and cd share a point.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

// Parameters t on segment ab (as a + t(b-a), t in [0,1]) where the circle
// (center, radius) is crossed.
std::vector<double> segment_circle_params(Point2 a, Point2 b, Point2 center, double radius);

// Intersection points of two circles, empty when disjoint or concentric.
std::vector<Point2> circle_circle(Point2 c0, double r0, Point2 c1, double r1);

// Parameter along the ray o + t*d where it crosses segment ab, if any.
std::optional<double> ray_segment(Point2 o, Point2 d, Point2 a, Point2 b);

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gtc

#endif  // GTC_GEOMETRY_HPP

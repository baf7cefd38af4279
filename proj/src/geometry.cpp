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

#include "gtc/geometry.hpp"

#include <algorithm>
#include <array>

namespace gtc {
namespace {

void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bv = s - a;
  double av = s - bv;
  e = (a - av) + (b - bv);
}

void two_product(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Adds q to a nonoverlapping expansion, dropping zero components.
void grow(std::vector<double>& expansion, double q) {
  std::vector<double> out;
  out.reserve(expansion.size() + 1);
  for (double c : expansion) {
    double s, e;
    two_sum(q, c, s, e);
    if (e != 0.0) out.push_back(e);
    q = s;
  }
  if (q != 0.0) out.push_back(q);
  expansion.swap(out);
}

int exact_orientation(Point2 a, Point2 b, Point2 c) {
  // ax*by - ax*cy - cx*by - ay*bx + ay*cx + cy*bx
  const std::array<std::array<double, 3>, 6> terms = {{
      {a.x, b.y, 1.0},
      {a.x, c.y, -1.0},
      {c.x, b.y, -1.0},
      {a.y, b.x, -1.0},
      {a.y, c.x, 1.0},
      {c.y, b.x, 1.0},
  }};
  std::vector<double> sum;
  for (const auto& t : terms) {
    double p, e;
    two_product(t[0], t[1], p, e);
    grow(sum, t[2] * e);
    grow(sum, t[2] * p);
  }
  for (auto it = sum.rbegin(); it != sum.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

}  // namespace

int orientation(Point2 a, Point2 b, Point2 c) {
  double left = (a.x - c.x) * (b.y - c.y);
  double right = (a.y - c.y) * (b.x - c.x);
  double det = left - right;
  double bound = 3.3306690738754716e-16 * (std::fabs(left) + std::fabs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

int orientation_tol(Point2 a, Point2 b, Point2 c, double eps) {
  double scale = std::max({dist(a, b), dist(b, c), dist(a, c), 1.0});
  double det = cross(b - a, c - a);
  if (std::fabs(det) <= eps * scale) return 0;
  return det > 0.0 ? 1 : -1;
}

Point2 closest_on_segment(Point2 p, Point2 a, Point2 b) {
  Point2 d = b - a;
  double l2 = dot(d, d);
  if (l2 == 0.0) return a;
  double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
  return a + t * d;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  return dist(p, closest_on_segment(p, a, b));
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  auto within = [](Point2 p, Point2 q, Point2 r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && within(a, b, c)) return true;
  if (o2 == 0 && within(a, b, d)) return true;
  if (o3 == 0 && within(c, d, a)) return true;
  if (o4 == 0 && within(c, d, b)) return true;
  return false;
}

std::vector<double> segment_circle_params(Point2 a, Point2 b, Point2 center, double radius) {
  std::vector<double> out;
  Point2 d = b - a;
  Point2 f = a - center;
  double A = dot(d, d);
  if (A == 0.0) return out;
  double B = 2.0 * dot(f, d);
  double C = dot(f, f) - radius * radius;
  double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return out;
  double s = std::sqrt(disc);
  // Numerically stable roots.
  double q = -0.5 * (B + (B >= 0.0 ? s : -s));
  double t0, t1;
  if (q != 0.0) {
    t0 = q / A;
    t1 = C / q;
  } else {
    t0 = t1 = -B / (2.0 * A);
  }
  if (t0 > t1) std::swap(t0, t1);
  for (double t : {t0, t1}) {
    if (t >= 0.0 && t <= 1.0) out.push_back(t);
  }
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

std::vector<Point2> circle_circle(Point2 c0, double r0, Point2 c1, double r1) {
  std::vector<Point2> out;
  Point2 d = c1 - c0;
  double l = norm(d);
  if (l == 0.0) return out;
  if (l > r0 + r1 || l < std::fabs(r0 - r1)) return out;
  double a = (r0 * r0 - r1 * r1 + l * l) / (2.0 * l);
  double h2 = r0 * r0 - a * a;
  Point2 u = d / l;
  Point2 m = c0 + a * u;
  if (h2 <= 0.0) {
    out.push_back(m);
    return out;
  }
  double h = std::sqrt(h2);
  out.push_back(m + h * perp(u));
  out.push_back(m - h * perp(u));
  return out;
}

std::optional<double> ray_segment(Point2 o, Point2 d, Point2 a, Point2 b) {
  Point2 e = b - a;
  double den = cross(d, e);
  if (den == 0.0) return std::nullopt;
  Point2 w = a - o;
  double t = cross(w, e) / den;
  double s = cross(w, d) / den;
  if (s < -1e-12 || s > 1.0 + 1e-12) return std::nullopt;
  return t;
}

}  // namespace gtc

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

#include "gtc/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "gtc/polygon.hpp"
#include "json.hpp"

namespace gtc {
namespace {

std::vector<Point2> read_points(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<Point2> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw FormatError(std::string(what) + " entries must be [x, y]");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

void write_points(std::ostringstream& os, const std::vector<Point2>& pts) {
  os << "[";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ", ";
    os << "[" << format_number(pts[i].x) << ", " << format_number(pts[i].y) << "]";
  }
  os << "]";
}

bool crosses(Point2 a, Point2 b, Point2 c, Point2 d) {
  return orientation(a, b, c) * orientation(a, b, d) < 0 && orientation(c, d, a) * orientation(c, d, b) < 0;
}

std::vector<Point2> around_circle(int n, Rng& rng, double rmin, double rmax) {
  std::vector<Point2> out;
  for (int k = 0; k < n; ++k) {
    double a = kTwoPi * (k + rng.uniform(-0.3, 0.3)) / n;
    out.push_back(rng.uniform(rmin, rmax) * polar(a));
  }
  return out;
}

std::vector<Point2> comb(int n, Rng& rng) {
  int teeth = n / 4;
  if (teeth == 0) return around_circle(n, rng, 10.0, 10.0);
  const double width = 20.0 / (2 * teeth - 1);
  std::vector<Point2> out = {{-10.0, -10.0}};
  int extra = n - 4 * teeth;
  for (int e = 1; e <= extra; ++e) {
    double x = -10.0 + 20.0 * e / (extra + 1);
    out.push_back({x, -10.0 - 1.5 * std::sin(kPi * e / (extra + 1))});
  }
  out.push_back({10.0, -10.0});
  for (int k = teeth - 1; k >= 0; --k) {
    double xl = -10.0 + 2 * k * width, xr = xl + width;
    double top = rng.uniform(2.0, 10.0);
    out.push_back({xr, top});
    out.push_back({xl, top});
    if (k > 0) {
      double floor = rng.uniform(-8.0, -4.0);
      out.push_back({xl, floor});
      out.push_back({xl - width, floor});
    }
  }
  return out;
}

std::vector<Point2> untangled(int n, Rng& rng) {
  std::vector<Point2> pts;
  for (int k = 0; k < n; ++k) pts.push_back({rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)});
  for (int k = n - 1; k > 0; --k) std::swap(pts[static_cast<size_t>(k)], pts[static_cast<size_t>(rng.below(k + 1))]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n && !changed; ++i) {
      for (int j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        auto P = [&](int k) { return pts[static_cast<size_t>(k % n)]; };
        if (crosses(P(i), P(i + 1), P(j), P(j + 1))) {
          std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
          changed = true;
        }
      }
    }
  }
  double area = 0.0;
  for (int k = 0; k < n; ++k) area += cross(pts[static_cast<size_t>(k)], pts[static_cast<size_t>((k + 1) % n)]);
  if (area < 0.0) std::reverse(pts.begin(), pts.end());
  return pts;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
  if (!j.is_object() || !j.contains("polygon") || !j.contains("points")) {
    throw FormatError("instance needs \"polygon\" and \"points\"");
  }
  return {read_points(j["polygon"], "polygon"), read_points(j["points"], "points")};
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "{\n  \"polygon\": ";
  write_points(os, inst.polygon);
  os << ",\n  \"points\": ";
  write_points(os, inst.points);
  os << "\n}\n";
  return os.str();
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Family parse_family(const std::string& name) {
  if (name == "convex") return Family::kConvex;
  if (name == "star") return Family::kStar;
  if (name == "comb") return Family::kComb;
  if (name == "random") return Family::kRandom;
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<Point2> generate_polygon(Family family, int n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Point2> v;
    switch (family) {
      case Family::kConvex: v = around_circle(n, rng, 10.0, 10.0); break;
      case Family::kStar: v = around_circle(n, rng, 3.0, 10.0); break;
      case Family::kComb: v = comb(n, rng); break;
      case Family::kRandom: v = untangled(n, rng); break;
    }
    try {
      SimplePolygon p(v);
      if (p.size() == n && !p.was_reversed()) return v;
    } catch (const InvalidPolygon&) {
    }
  }
  throw std::runtime_error("could not generate a simple polygon");
}

std::vector<Point2> sample_points(const std::vector<Point2>& polygon, int m, Rng& rng) {
  TriangulatedPolygon tp{SimplePolygon(polygon)};
  const auto& P = tp.polygon();
  std::vector<double> cum;
  double total = 0.0;
  for (const auto& t : tp.triangles()) {
    total += 0.5 * cross(P[t[1]] - P[t[0]], P[t[2]] - P[t[0]]);
    cum.push_back(total);
  }
  std::vector<Point2> out;
  for (int k = 0; k < m; ++k) {
    double u = rng.uniform() * total;
    size_t t = static_cast<size_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    t = std::min(t, cum.size() - 1);
    const auto& tri = tp.triangles()[t];
    double r1 = std::sqrt(rng.uniform()), r2 = rng.uniform();
    Point2 a = P[tri[0]], b = P[tri[1]], c = P[tri[2]];
    out.push_back((1.0 - r1) * a + r1 * (1.0 - r2) * b + r1 * r2 * c);
  }
  return out;
}

Instance generate_instance(Family family, int n, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("need at least one point");
  Rng rng(seed);
  Instance inst;
  inst.polygon = generate_polygon(family, n, rng);
  inst.points = sample_points(inst.polygon, m, rng);
  return inst;
}

}  // namespace gtc

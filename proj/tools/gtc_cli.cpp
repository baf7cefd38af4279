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

// gtc: solve, gen, render, oracle.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gtc/driver.hpp"
#include "gtc/instance.hpp"
#include "gtc/oracle.hpp"
#include "json.hpp"

namespace {

using namespace gtc;

constexpr int kExitInvalid = 1;
constexpr int kExitOutside = 2;
constexpr int kExitMismatch = 3;
constexpr double kOracleRelTol = 1e-4;
constexpr int kDiskSamples = 512;

struct Failure {
  int code;
  std::string what;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInvalid, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Failure{kExitInvalid, "cannot write " + out};
  f << text;
}

// Parses and validates; the polygon comes back counterclockwise.
struct Loaded {
  Instance inst;
  SimplePolygon poly;
};

Loaded load_instance(const std::string& path, double eps) {
  Loaded l;
  try {
    l.inst = parse_instance(read_file(path));
    l.poly = SimplePolygon(l.inst.polygon, eps);
  } catch (const FormatError& e) {
    throw Failure{kExitInvalid, std::string("invalid instance: ") + e.what()};
  } catch (const InvalidPolygon& e) {
    throw Failure{kExitInvalid, std::string("invalid polygon: ") + e.what()};
  }
  if (l.poly.was_reversed()) std::cerr << "warning: polygon was clockwise; reversed\n";
  if (l.inst.points.empty()) throw Failure{kExitInvalid, "instance has no points"};
  for (size_t q = 0; q < l.inst.points.size(); ++q) {
    if (point_in_polygon(l.poly, l.inst.points[q]) == Containment::kOutside) {
      throw Failure{kExitOutside, "point " + std::to_string(q) + " lies outside the polygon"};
    }
  }
  return l;
}

std::string point_json(Point2 p) { return "[" + format_number(p.x) + ", " + format_number(p.y) + "]"; }

std::string record_json(const TwoCenterSolution& sol, long wall_ms) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"radius\": " << format_number(sol.radius) << ",\n";
  os << "  \"centers\": [" << point_json(sol.c1) << ", " << point_json(sol.c2) << "],\n";
  os << "  \"pair\": [" << sol.pair.i << ", " << sol.pair.j << "],\n";
  os << "  \"assignment\": [";
  for (size_t q = 0; q < sol.assignment.size(); ++q) os << (q ? ", " : "") << sol.assignment[q];
  os << "],\n";
  os << "  \"branch_stats\": {";
  for (size_t b = 0; b < sol.branch_stats.size(); ++b) {
    os << (b ? ", " : "") << "\"" << branch_name(static_cast<Branch>(b)) << "\": " << sol.branch_stats[b];
  }
  os << "},\n";
  os << "  \"wall_time_ms\": " << wall_ms << "\n";
  os << "}\n";
  return os.str();
}

struct Record {
  double radius = 0.0;
  Point2 c1, c2;
  std::vector<int> assignment;
};

Record parse_record(const std::string& text) {
  Record r;
  try {
    auto j = nlohmann::json::parse(text);
    r.radius = j.at("radius").get<double>();
    const auto& c = j.at("centers");
    if (!c.is_array() || c.size() != 2) throw Failure{kExitInvalid, "centers must hold two points"};
    r.c1 = {c[0].at(0).get<double>(), c[0].at(1).get<double>()};
    r.c2 = {c[1].at(0).get<double>(), c[1].at(1).get<double>()};
    r.assignment = j.at("assignment").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Failure{kExitInvalid, std::string("invalid solution: ") + e.what()};
  }
  return r;
}

// SVG, y flipped so the picture matches the usual axes.
class Svg {
 public:
  explicit Svg(const std::vector<Point2>& frame) {
    double x0 = frame[0].x, x1 = x0, y0 = frame[0].y, y1 = y0;
    for (Point2 p : frame) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    const double mx = 0.05 * (x1 - x0), my = 0.05 * (y1 - y0);
    minx_ = x0 - mx;
    miny_ = y0 - my;
    w_ = (x1 - x0) + 2 * mx;
    h_ = (y1 - y0) + 2 * my;
    unit_ = 0.004 * std::max(w_, h_);
  }

  void polygon(const std::vector<Point2>& pts, const std::string& cls, const std::string& style) {
    body_ << "  <polygon class=\"" << cls << "\" points=\"";
    for (size_t k = 0; k < pts.size(); ++k) body_ << (k ? " " : "") << xy(pts[k]);
    body_ << "\" " << style << "/>\n";
  }
  void dot(Point2 p, double r, const std::string& cls, const std::string& fill) {
    Point2 s = flip(p);
    body_ << "  <circle class=\"" << cls << "\" cx=\"" << num(s.x) << "\" cy=\"" << num(s.y) << "\" r=\"" << num(r * unit_)
          << "\" fill=\"" << fill << "\"/>\n";
  }
  void path(const std::vector<std::vector<Point2>>& pieces, const std::string& cls, const std::string& stroke) {
    body_ << "  <path class=\"" << cls << "\" d=\"";
    for (const auto& piece : pieces) {
      for (size_t k = 0; k < piece.size(); ++k) body_ << (k ? " L" : " M") << xy(piece[k]);
    }
    body_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(unit_) << "\"/>\n";
  }
  double unit() const { return unit_; }

  std::string str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(minx_) << " " << num(miny_) << " "
       << num(w_) << " " << num(h_) << "\">\n";
    os << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  Point2 flip(Point2 p) const { return {p.x, 2 * miny_ + h_ - p.y}; }
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }
  std::string xy(Point2 p) const {
    Point2 s = flip(p);
    return num(s.x) + "," + num(s.y);
  }

  double minx_ = 0, miny_ = 0, w_ = 1, h_ = 1, unit_ = 0.01;
  std::ostringstream body_;
};

// Arcs of the geodesic circle, kDiskSamples points shared by arc length.
std::vector<std::vector<Point2>> disk_outline(const TriangulatedPolygon& tp, Point2 c, double r) {
  auto arcs = geodesic_circle(tp, c, r);
  double total = 0.0;
  for (const auto& a : arcs) total += a.radius * a.sweep;
  std::vector<std::vector<Point2>> out;
  if (total <= 0.0) return out;
  for (const auto& a : arcs) {
    int count = std::max(2, static_cast<int>(std::lround(kDiskSamples * a.radius * a.sweep / total)));
    std::vector<Point2> piece;
    for (int s = 0; s < count; ++s) piece.push_back(a.at(a.start + a.sweep * s / (count - 1)));
    out.push_back(std::move(piece));
  }
  return out;
}

std::string render_svg(const Loaded& l, const std::optional<Record>& rec) {
  TriangulatedPolygon tp(l.poly);
  Svg svg(l.poly.vertices());
  svg.polygon(l.poly.vertices(), "polygon", "fill=\"#f4f4f4\" stroke=\"#222\" stroke-width=\"" + std::to_string(svg.unit()) + "\"");
  GeodesicHull hull = geodesic_hull(tp, l.inst.points);
  if (hull.ring().size() >= 2) {
    svg.polygon(hull.ring(), "hull", "fill=\"#dde8f6\" stroke=\"#3a6ea5\" stroke-width=\"" + std::to_string(svg.unit()) + "\"");
  }
  if (rec) {
    svg.path(disk_outline(tp, rec->c1, rec->radius), "disk", "#c0392b");
    svg.path(disk_outline(tp, rec->c2, rec->radius), "disk", "#27ae60");
  }
  for (size_t q = 0; q < l.inst.points.size(); ++q) {
    std::string fill = "#111";
    if (rec && q < rec->assignment.size()) fill = rec->assignment[q] == 1 ? "#c0392b" : "#27ae60";
    svg.dot(l.inst.points[q], 1.5, "point", fill);
  }
  if (rec) {
    svg.dot(rec->c1, 3.0, "center", "#7b1d12");
    svg.dot(rec->c2, 3.0, "center", "#145a32");
  }
  return svg.str();
}

Record to_record(const TwoCenterSolution& sol) { return {sol.radius, sol.c1, sol.c2, sol.assignment}; }

int run_solve(const std::string& input, double eps, bool oracle, const std::string& out, const std::string& svg_path) {
  Loaded l = load_instance(input, eps);
  auto t0 = std::chrono::steady_clock::now();
  TwoCenterSolution sol = two_center(l.poly, l.inst.points);
  long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  if (!sol.certified) std::cerr << "warning: certificate check failed\n";
  emit(record_json(sol, ms), out);
  if (!svg_path.empty()) emit(render_svg(l, to_record(sol)), svg_path);

  if (!oracle) return 0;
  if (l.inst.points.size() > 12) {
    std::cerr << "warning: oracle skipped, more than 12 points\n";
    return 0;
  }
  auto ora = oracle_two_center(l.poly, l.inst.points);
  const double rel = std::fabs(sol.radius - ora.radius) / std::max(1.0, std::fabs(ora.radius));
  std::cerr << "oracle radius " << format_number(ora.radius) << ", relative difference " << rel << "\n";
  if (rel > kOracleRelTol) {
    std::cerr << "error: solver and oracle disagree\n";
    return kExitMismatch;
  }
  return 0;
}

int run_gen(int n, int m, std::uint64_t seed, const std::string& family, const std::string& out) {
  if (n < 3) throw Failure{kExitInvalid, "--n must be at least 3"};
  if (m < 1) throw Failure{kExitInvalid, "--m must be at least 1"};
  Family fam;
  try {
    fam = parse_family(family);
  } catch (const std::exception& e) {
    throw Failure{kExitInvalid, e.what()};
  }
  emit(serialize_instance(generate_instance(fam, n, m, seed)), out);
  return 0;
}

int run_render(const std::string& input, const std::string& solution, double eps, const std::string& out) {
  Loaded l = load_instance(input, eps);
  std::optional<Record> rec;
  if (!solution.empty()) {
    rec = parse_record(read_file(solution));
    if (rec->assignment.size() != l.inst.points.size()) throw Failure{kExitInvalid, "assignment size does not match"};
    TriangulatedPolygon tp(l.poly);
    for (Point2 c : {rec->c1, rec->c2}) {
      if (point_in_polygon(l.poly, c) == Containment::kOutside) throw Failure{kExitInvalid, "center outside the polygon"};
    }
    const double cov = coverage_radius(tp, l.inst.points, rec->c1, rec->c2);
    if (cov > rec->radius * (1 + 1e-6) + l.poly.eps()) {
      throw Failure{kExitInvalid, "solution does not cover the points at its radius"};
    }
  }
  emit(render_svg(l, rec), out);
  return 0;
}

int run_oracle(const std::string& input, double eps, const std::string& out) {
  Loaded l = load_instance(input, eps);
  OracleTwoCenter ora;
  try {
    ora = oracle_two_center(l.poly, l.inst.points);
  } catch (const TooLarge& e) {
    throw Failure{kExitInvalid, e.what()};
  }
  std::ostringstream os;
  os << "{\n  \"radius\": " << format_number(ora.radius) << ",\n";
  os << "  \"centers\": [" << point_json(ora.c1) << ", " << point_json(ora.c2) << "],\n";
  os << "  \"assignment\": [";
  for (size_t q = 0; q < ora.assignment.size(); ++q) os << (q ? ", " : "") << ora.assignment[q];
  os << "],\n  \"consistent\": " << (ora.consistent ? "true" : "false") << "\n}\n";
  emit(os.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic two-center of points in a simple polygon"};
  app.require_subcommand(1);

  std::string input, solution, out, svg, family = "random";
  double eps = kEpsGeom;
  bool oracle = false;
  int n = 12, m = 8;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Compute a two-center and print its record");
  solve->add_option("input", input, "Instance JSON")->required();
  solve->add_option("--epsilon", eps, "Geometric tolerance (scaled by the polygon size)");
  solve->add_flag("--oracle", oracle, "Cross-check against the brute-force oracle");
  solve->add_option("--out", out, "Write the record here instead of stdout");
  solve->add_option("--svg", svg, "Also render the solution");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", n, "Polygon vertices");
  gen->add_option("--m", m, "Points");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--family", family, "convex, star, comb or random");
  gen->add_option("--out", out, "Output path");

  auto* render = app.add_subcommand("render", "Draw an instance and optionally a solution as SVG");
  render->add_option("input", input, "Instance JSON")->required();
  render->add_option("solution", solution, "Solution record JSON");
  render->add_option("--epsilon", eps, "Geometric tolerance");
  render->add_option("--out", out, "SVG path");

  auto* orc = app.add_subcommand("oracle", "Brute-force two-center (at most 12 points)");
  orc->add_option("input", input, "Instance JSON")->required();
  orc->add_option("--epsilon", eps, "Geometric tolerance");
  orc->add_option("--out", out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*solve) return run_solve(input, eps, oracle, out, svg);
    if (*gen) return run_gen(n, m, seed, family, out);
    if (*render) return run_render(input, solution, eps, out);
    if (*orc) return run_oracle(input, eps, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what << "\n";
    return f.code;
  } catch (const PointOutsidePolygon& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutside;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

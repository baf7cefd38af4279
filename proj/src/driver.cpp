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

#include "gtc/driver.hpp"

#include <algorithm>
#include <iostream>
#include <set>

namespace gtc {
namespace {

int mod(int a, int k) { return ((a % k) + k) % k; }

double chain_rad(DecisionContext& ctx, int a, int b) {
  return ctx.one_center_of(chain_points(ctx.hull(), a, b)).radius;
}

bool any_feasible(DecisionContext& ctx, const std::vector<CandidatePair>& cands, double r) {
  for (const auto& c : cands) {
    if (decide(ctx, c.i, c.j, r).feasible) return true;
  }
  return false;
}

}  // namespace

double pair_chain_radius(DecisionContext& ctx, int i, int j) {
  return std::max(ctx.one_center_of(ctx.first_side(i, j)).radius, ctx.one_center_of(ctx.second_side(i, j)).radius);
}

std::vector<CandidatePair> candidate_pairs(const GeodesicHull& h) {
  DecisionContext ctx(h);
  return candidate_pairs(ctx);
}

std::vector<CandidatePair> candidate_pairs(DecisionContext& ctx) {
  const int k = ctx.hull().k();
  if (k < 2) throw DegenerateHull("candidate pairs need at least two extremes");
  if (k == 2) return {{0, 1, PairKind::kType1}, {1, 0, PairKind::kType1}};
  const double tol = ctx.tol();

  // Offsets (clockwise from i) bounding the run f(i). Clockwise of the run the
  // chain from i is strictly lighter than its complement, past it strictly
  // heavier; ties between the two sides form the run itself.
  std::vector<int> run_lo(static_cast<size_t>(k)), run_hi(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    int lo = k, hi = 0, lighter = 0, heavier = 0;
    for (int d = 1; d < k; ++d) {
      int j = mod(i + d, k);
      const double ahead = chain_rad(ctx, i, j), behind = chain_rad(ctx, j, i);
      if (ahead < behind - tol) {
        ++lighter;
        if (heavier > 0 || lo < k) std::cerr << "warning: chain radii from extreme " << i << " are not monotone\n";
      } else if (ahead > behind + tol) {
        ++heavier;
      } else {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    }
    if (lo == k) {
      lo = lighter + 1;
      hi = lighter;
    }
    run_lo[static_cast<size_t>(i)] = lo;
    run_hi[static_cast<size_t>(i)] = hi;
  }
  // Last index of f_cw(x) and first of f_ccw(x), both clockwise from x. An
  // empty set leaves x itself.
  auto last_cw = [&](int x) { return mod(x + run_lo[static_cast<size_t>(x)] - 1, k); };
  auto first_ccw = [&](int x) { return mod(x + run_hi[static_cast<size_t>(x)] + 1, k); };

  std::vector<CandidatePair> out;
  std::set<std::pair<int, int>> seen;
  auto emit = [&](int i, int j, PairKind kind) {
    j = mod(j, k);
    if (j == i || !seen.insert({i, j}).second) return;
    out.push_back({i, j, kind});
  };
  for (int i = 0; i < k; ++i) {
    const int a = first_ccw(i), b = last_cw(mod(i + 1, k));
    for (int j : {a, b, a - 1, b - 1}) emit(i, j, PairKind::kType1);
    const int da = mod(a - i, k), db = mod(b - i, k);
    if (da < db) {
      // j and j+1 strictly inside the chain from a to b.
      for (int d = 1; d + 1 < mod(b - a, k); ++d) emit(i, a + d, PairKind::kType2);
    }
  }
  return out;
}

std::vector<double> spm_distances(DecisionContext& ctx) {
  std::vector<double> vals = {0.0, ctx.hull_center().radius};
  for (Point2 q : ctx.hull().points()) {
    for (const auto& v : spm_vertices(ctx.ambient(), q)) vals.push_back(v.distance);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

RadiusInterval assistant_interval(DecisionContext& ctx, const std::vector<CandidatePair>& cands) {
  if (cands.empty()) throw DegenerateHull("no candidate pairs");
  const double top = ctx.hull_center().radius;
  std::vector<double> vals;
  for (double v : spm_distances(ctx)) {
    if (v <= top) vals.push_back(v);
  }
  long lo = -1, hi = static_cast<long>(vals.size()) - 1;
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (any_feasible(ctx, cands, vals[static_cast<size_t>(mid)])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  RadiusInterval iv;
  iv.hi = vals[static_cast<size_t>(hi)];
  iv.lo = hi > 0 ? vals[static_cast<size_t>(hi - 1)] : 0.0;
  return iv;
}

double coverage_radius(const TriangulatedPolygon& tp, const std::vector<Point2>& Q, Point2 c1, Point2 c2) {
  double worst = 0.0;
  for (Point2 q : Q) worst = std::max(worst, std::min(geodesic_distance(tp, c1, q), geodesic_distance(tp, c2, q)));
  return worst;
}

TwoCenterSolution two_center(const SimplePolygon& P, const std::vector<Point2>& Q) {
  if (Q.empty()) throw GeometryError("no points");
  auto tp = std::make_shared<const TriangulatedPolygon>(P);
  GeodesicHull hull = geodesic_hull(tp, Q);
  TwoCenterSolution sol;
  sol.assignment.assign(Q.size(), 1);

  std::vector<Point2> distinct;
  for (Point2 q : Q) {
    bool dup = false;
    for (Point2 d : distinct) dup = dup || dist(d, q) <= P.eps();
    if (!dup) distinct.push_back(q);
  }
  if (distinct.size() <= 2) {
    sol.c1 = distinct.front();
    sol.c2 = distinct.back();
    sol.pair = {0, hull.k() > 1 ? 1 : 0, PairKind::kType1};
    for (size_t q = 0; q < Q.size(); ++q) sol.assignment[q] = dist(Q[q], sol.c1) <= dist(Q[q], sol.c2) ? 1 : 2;
    sol.radius = 0.0;
    sol.certified = true;
    return sol;
  }

  DecisionContext ctx(hull);
  std::vector<CandidatePair> cands = candidate_pairs(ctx);
  sol.candidates = static_cast<int>(cands.size());
  RadiusInterval iv = assistant_interval(ctx, cands);
  sol.interval = iv;

  std::vector<std::pair<double, size_t>> order;
  for (size_t c = 0; c < cands.size(); ++c) order.push_back({pair_chain_radius(ctx, cands[c].i, cands[c].j), c});
  std::stable_sort(order.begin(), order.end());

  double best = iv.hi;
  std::optional<PairOptimum> best_opt;
  CandidatePair best_pair;
  for (const auto& [key, c] : order) {
    const CandidatePair& cp = cands[c];
    if (key > best + ctx.tol()) break;  // its own chains already need more
    auto opt = optimize_pair(ctx, cp.i, cp.j, {iv.lo, best});
    if (!opt) continue;
    if (!best_opt || opt->radius < best_opt->radius) {
      best_opt = opt;
      best_pair = cp;
      best = opt->radius;
    }
  }
  if (!best_opt) throw GeometryError("no candidate pair is feasible at the top of the assistant interval");

  sol.radius = best_opt->radius;
  sol.pair = best_pair;
  sol.c1 = best_opt->centers.first;
  sol.c2 = best_opt->centers.second;

  // Recentre each cluster on its own one-center when that still covers it.
  std::vector<int> side1, side2;
  for (size_t q = 0; q < Q.size(); ++q) {
    bool first = geodesic_distance(*tp, sol.c1, Q[q]) <= geodesic_distance(*tp, sol.c2, Q[q]);
    (first ? side1 : side2).push_back(static_cast<int>(q));
  }
  if (!side1.empty() && !side2.empty()) {
    Point2 r1 = ctx.one_center_of(side1).center, r2 = ctx.one_center_of(side2).center;
    if (coverage_radius(*tp, Q, r1, r2) <= sol.radius + ctx.tol()) {
      sol.c1 = r1;
      sol.c2 = r2;
    }
  }
  for (size_t q = 0; q < Q.size(); ++q) {
    sol.assignment[q] = geodesic_distance(*tp, sol.c1, Q[q]) <= geodesic_distance(*tp, sol.c2, Q[q]) ? 1 : 2;
  }

  const double cov = coverage_radius(*tp, Q, sol.c1, sol.c2);
  sol.certified = cov <= sol.radius * (1 + 1e-6) + ctx.tol() && hull.contains(sol.c1) != Containment::kOutside &&
                  hull.contains(sol.c2) != Containment::kOutside;
  if (!sol.certified) std::cerr << "warning: certificate check failed, coverage " << cov << " vs " << sol.radius << "\n";
  sol.branch_stats = ctx.branch_counts();
  return sol;
}

}  // namespace gtc

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

#include "gtc/optimizer.hpp"

#include <algorithm>

namespace gtc {
namespace {

// Triples of interior points are only enumerated up to this many.
constexpr size_t kTripleBudget = 220;

double scale_of(const DecisionContext& ctx) { return std::max(1.0, ctx.ambient().polygon().diameter()); }

std::vector<int> with(std::vector<int> base, std::initializer_list<int> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

std::vector<int> side_of(const DecisionContext& ctx, int i, int j, int t) {
  return t == 1 ? ctx.first_side(i, j) : ctx.second_side(i, j);
}

// Ascending, inside iv, near-duplicates merged (the first provenance wins),
// closed by iv.hi.
std::vector<CriticalRadius> clip(std::vector<CriticalRadius> v, RadiusInterval iv, double dedupe) {
  std::stable_sort(v.begin(), v.end(), [](const CriticalRadius& a, const CriticalRadius& b) { return a.value < b.value; });
  std::vector<CriticalRadius> out;
  for (const auto& c : v) {
    if (!(c.value > iv.lo) || c.value >= iv.hi) continue;
    if (!out.empty() && c.value - out.back().value <= dedupe) continue;
    out.push_back(c);
  }
  if (!out.empty() && iv.hi - out.back().value <= dedupe) out.pop_back();
  out.push_back({iv.hi, Provenance::kEndpoint, 0, -1, -1});
  return out;
}

std::vector<double> values_of(const std::vector<CriticalRadius>& v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(c.value);
  return out;
}

// Candidates are exact critical radii, where the disks may meet in a single
// point; test them with a tolerance of slack.
DecisionResult decide_at(DecisionContext& ctx, int i, int j, double r) { return decide(ctx, i, j, r + ctx.tol()); }

}  // namespace

size_t smallest_feasible(DecisionContext& ctx, int i, int j, const std::vector<double>& sorted) {
  if (sorted.empty()) throw GeometryError("no radius to search");
  long lo = -1, hi = static_cast<long>(sorted.size()) - 1;
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (decide_at(ctx, i, j, sorted[static_cast<size_t>(mid)]).feasible) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<size_t>(hi);
}

std::vector<CriticalRadius> structure_radii(DecisionContext& ctx, int i, int j) {
  const GeodesicHull& h = ctx.hull();
  const auto& Q = h.points();
  std::vector<CriticalRadius> out;
  out.push_back({ctx.hull_center().radius, Provenance::kStructure, 0, -1, -1});
  for (int v : {i, i + 1, j, j + 1}) out.push_back({ctx.shared_vertex_split(i, j, v).radius, Provenance::kStructure, 0, -1, -1});
  for (int t = 1; t <= 2; ++t) {
    const std::vector<int> side = side_of(ctx, i, j, t);
    out.push_back({ctx.one_center_of(side).radius, Provenance::kStructure, t, -1, -1});
    for (int q : h.interior_points()) {
      out.push_back({ctx.one_center_of(with(side, {q})).radius, Provenance::kStructure, t, q, -1});
      double far = 0.0;
      for (int s : side) far = std::max(far, geodesic_distance(ctx.ambient(), Q[static_cast<size_t>(q)], Q[static_cast<size_t>(s)]));
      out.push_back({0.5 * far, Provenance::kStructure, t, q, -1});
    }
  }
  return out;
}

RadiusInterval narrow_interval(DecisionContext& ctx, int i, int j, RadiusInterval iv) {
  if (!decide_at(ctx, i, j, iv.hi).feasible) throw InfeasibleInterval("decide fails at the top of the interval");
  auto cands = clip(structure_radii(ctx, i, j), iv, 1e-12 * scale_of(ctx));
  const std::vector<double> vals = values_of(cands);
  size_t k = smallest_feasible(ctx, i, j, vals);
  return {k == 0 ? iv.lo : vals[k - 1], vals[k]};
}

std::optional<double> pair_coincidence_radius(DecisionContext& ctx, int i, int j, int t, int q1, int q2,
                                              RadiusInterval iv) {
  if (q1 == q2) return std::nullopt;
  const auto& Q = ctx.hull().points();
  const std::vector<int> side = side_of(ctx, i, j, t);
  const OneCenterResult& oc = ctx.one_center_of(with(side, {q1, q2}));
  const double rho = oc.radius, slack = 1e-7 * scale_of(ctx);
  auto d = [&](int q) { return geodesic_distance(ctx.ambient(), oc.center, Q[static_cast<size_t>(q)]); };
  if (std::fabs(d(q1) - rho) > slack || std::fabs(d(q2) - rho) > slack) return std::nullopt;
  double far = 0.0;
  for (int s : side) far = std::max(far, d(s));
  if (far < rho - slack) return std::nullopt;
  if (!iv.contains(rho)) return std::nullopt;
  return rho;
}

CriticalRadiusSet critical_radii(DecisionContext& ctx, int i, int j, RadiusInterval iv) {
  const std::vector<int>& qi = ctx.hull().interior_points();
  std::vector<CriticalRadius> vals;
  const size_t n = qi.size();
  const bool triples = n * (n - 1) * (n - 2) / 6 <= kTripleBudget || n < 3;
  for (int t = 1; t <= 2; ++t) {
    const std::vector<int> side = side_of(ctx, i, j, t);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = a + 1; b < n; ++b) {
        if (auto rho = pair_coincidence_radius(ctx, i, j, t, qi[a], qi[b], iv)) {
          vals.push_back({*rho, Provenance::kPair, t, qi[a], qi[b]});
        } else {
          // Kept without the boundary checks, so a pair disk that misses the
          // chain still counts.
          vals.push_back({ctx.one_center_of(with(side, {qi[a], qi[b]})).radius, Provenance::kStructure, t, qi[a], qi[b]});
        }
        if (!triples) continue;
        for (size_t c = b + 1; c < n; ++c) {
          vals.push_back({ctx.one_center_of(with(side, {qi[a], qi[b], qi[c]})).radius, Provenance::kStructure, t, qi[a], qi[b]});
        }
      }
    }
  }
  // Structure values inside the narrowed interval stay candidates too.
  for (const auto& c : structure_radii(ctx, i, j)) vals.push_back(c);
  CriticalRadiusSet out;
  out.values = clip(std::move(vals), iv, 1e-12 * scale_of(ctx));
  return out;
}

std::optional<PairOptimum> optimize_pair(DecisionContext& ctx, int i, int j, RadiusInterval iv) {
  RadiusInterval narrow;
  try {
    narrow = narrow_interval(ctx, i, j, iv);
  } catch (const InfeasibleInterval&) {
    return std::nullopt;
  }
  CriticalRadiusSet crit = critical_radii(ctx, i, j, narrow);
  const std::vector<double> vals = values_of(crit.values);
  const double r = vals[smallest_feasible(ctx, i, j, vals)];
  PairOptimum out;
  out.radius = r;
  out.decision = decide_at(ctx, i, j, r);
  out.centers = *out.decision.centers;
  return out;
}

}  // namespace gtc

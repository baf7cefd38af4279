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

#ifndef GTC_OPTIMIZER_HPP
#define GTC_OPTIMIZER_HPP

#include <optional>
#include <vector>

#include "gtc/decision.hpp"

namespace gtc {

struct InfeasibleInterval : GeometryError {
  using GeometryError::GeometryError;
};

// (lo, hi]
struct RadiusInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double r) const { return r > lo && r <= hi; }
};

enum class Provenance { kPair, kStructure, kEndpoint };

struct CriticalRadius {
  double value = 0.0;
  Provenance kind = Provenance::kStructure;
  int side = 0;        // 1 or 2, 0 when not tied to a side
  int q1 = -1, q2 = -1;  // Q indices behind a pair value
};

struct CriticalRadiusSet {
  std::vector<CriticalRadius> values;  // ascending, inside the interval, last is hi
};

// Radius candidates where the shape of the two disk intersections can change.
std::vector<CriticalRadius> structure_radii(DecisionContext& ctx, int i, int j);

RadiusInterval narrow_interval(DecisionContext& ctx, int i, int j, RadiusInterval iv);

// Radius of the smallest disk holding side t's chain and both q1, q2, when
// q1 and q2 both sit on its boundary, a chain point does too, and it falls in iv.
std::optional<double> pair_coincidence_radius(DecisionContext& ctx, int i, int j, int t, int q1, int q2,
                                              RadiusInterval iv);

CriticalRadiusSet critical_radii(DecisionContext& ctx, int i, int j, RadiusInterval iv);

struct PairOptimum {
  double radius = 0.0;
  CenterPair centers;
  DecisionResult decision;
};

std::optional<PairOptimum> optimize_pair(DecisionContext& ctx, int i, int j, RadiusInterval iv);

// Smallest feasible value of a sorted list, by bisection with decide; the
// last value must be feasible.
size_t smallest_feasible(DecisionContext& ctx, int i, int j, const std::vector<double>& sorted);

}  // namespace gtc

#endif  // GTC_OPTIMIZER_HPP

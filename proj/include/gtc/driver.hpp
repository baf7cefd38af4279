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

#ifndef GTC_DRIVER_HPP
#define GTC_DRIVER_HPP

#include <array>
#include <vector>

#include "gtc/optimizer.hpp"

namespace gtc {

struct DegenerateHull : GeometryError {
  using GeometryError::GeometryError;
};

enum class PairKind { kType1, kType2 };

struct CandidatePair {
  int i = 0;
  int j = 1;
  PairKind kind = PairKind::kType1;
};

std::vector<CandidatePair> candidate_pairs(const GeodesicHull& h);
std::vector<CandidatePair> candidate_pairs(DecisionContext& ctx);

// Radius of the larger of the two chains a pair splits the extremes into.
double pair_chain_radius(DecisionContext& ctx, int i, int j);

// Every d(q, x) with x a vertex of q's shortest path map, plus the hull
// radius; sorted and unique.
std::vector<double> spm_distances(DecisionContext& ctx);

RadiusInterval assistant_interval(DecisionContext& ctx, const std::vector<CandidatePair>& cands);

struct TwoCenterSolution {
  Point2 c1, c2;
  double radius = 0.0;
  CandidatePair pair;
  std::vector<int> assignment;  // 1 or 2 per input point
  std::array<long, 7> branch_stats{};  // decide calls per Branch
  RadiusInterval interval;
  int candidates = 0;
  bool certified = false;
};

// Worst distance from a point to its nearer center.
double coverage_radius(const TriangulatedPolygon& tp, const std::vector<Point2>& Q, Point2 c1, Point2 c2);

TwoCenterSolution two_center(const SimplePolygon& P, const std::vector<Point2>& Q);

}  // namespace gtc

#endif  // GTC_DRIVER_HPP

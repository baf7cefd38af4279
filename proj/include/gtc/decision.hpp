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

#ifndef GTC_DECISION_HPP
#define GTC_DECISION_HPP

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "gtc/disk.hpp"

namespace gtc {

struct InvalidPair : GeometryError {
  using GeometryError::GeometryError;
};

enum class Branch { kHullRadius, kSharedVertex, kIEmpty, kQIEmpty, kMBothEmpty, kMOneEmpty, kScan };
const char* branch_name(Branch b);

using CenterPair = std::pair<Point2, Point2>;

struct DecisionResult {
  bool feasible = false;
  std::optional<CenterPair> centers;
  std::vector<int> assignment;  // per Q index: 1 or 2, empty when infeasible
  Branch branch = Branch::kScan;
};

// Shared state for repeated decisions on one hull. The one-centers of point
// subsets do not depend on r and are memoized. Not thread safe.
class DecisionContext {
 public:
  explicit DecisionContext(GeodesicHull h);

  const GeodesicHull& hull() const { return h_; }
  const TriangulatedPolygon& ambient() const { return h_.ambient(); }
  double tol() const { return tol_; }

  // Q indices of the extremes on each side of the pair.
  std::vector<int> first_side(int i, int j) const;   // labels j+1 .. i
  std::vector<int> second_side(int i, int j) const;  // labels i+1 .. j

  const OneCenterResult& one_center_of(std::vector<int> idx);
  const OneCenterResult& hull_center();

  // Smallest radius at which some split of Q with both disks holding the
  // extreme labeled `v` works, and the split realizing it.
  struct SharedSplit {
    double radius = 0.0;
    std::vector<int> side1, side2;
  };
  const SharedSplit& shared_vertex_split(int i, int j, int v);

  void check_pair(int i, int j) const;

  // decide calls per branch, indexed by Branch.
  const std::array<long, 7>& branch_counts() const { return counts_; }
  void count(Branch b) { ++counts_[static_cast<size_t>(b)]; }

 private:
  GeodesicHull h_;
  double tol_;
  std::map<std::vector<int>, OneCenterResult> memo_;
  std::map<std::tuple<int, int, int>, SharedSplit> shared_;
  std::array<long, 7> counts_{};
};

std::optional<CenterPair> shared_vertex_decide(DecisionContext& ctx, int i, int j, double r, int v);

// First pair of candidate positions whose disks together hold `interior`.
std::optional<CenterPair> scan_decide(const TriangulatedPolygon& tp, const std::vector<Point2>& side1,
                                      const std::vector<Point2>& side2, const std::vector<Point2>& interior,
                                      double r, double tol);

DecisionResult decide(DecisionContext& ctx, int i, int j, double r);
DecisionResult decide(const GeodesicHull& h, int i, int j, double r);

}  // namespace gtc

#endif  // GTC_DECISION_HPP

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

// Shared shapes for the test binaries.

#ifndef GTC_TESTS_SUPPORT_HPP
#define GTC_TESTS_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "gtc/instance.hpp"
#include "gtc/polygon.hpp"

namespace gtc::testing {

inline std::vector<Point2> square4() { return {{0, 0}, {4, 0}, {4, 4}, {0, 4}}; }
inline std::vector<Point2> ell6() { return {{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}; }
inline std::vector<Point2> qsym() { return {{1, 1}, {1, 3}, {3, 3}, {3, 1}}; }
inline std::vector<Point2> arms() { return {{3, 1}, {3, 1.5}, {1, 3}, {1.5, 3}}; }
inline std::vector<Point2> bowtie() { return {{0, 0}, {2, 2}, {2, 0}, {0, 2}}; }

inline TriangulatedPolygon tri(const std::vector<Point2>& v) { return TriangulatedPolygon(SimplePolygon(v)); }

// Seeded instance drawn from the non-convex families.
inline Instance random_instance(std::uint64_t seed, int n, int m) {
  static const Family fams[] = {Family::kRandom, Family::kStar, Family::kComb};
  return generate_instance(fams[seed % 3], n, m, seed);
}

inline double rel_err(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

}  // namespace gtc::testing

#endif  // GTC_TESTS_SUPPORT_HPP

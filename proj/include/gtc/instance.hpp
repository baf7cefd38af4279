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

#ifndef GTC_INSTANCE_HPP
#define GTC_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gtc/geometry.hpp"

namespace gtc {

struct Instance {
  std::vector<Point2> polygon;
  std::vector<Point2> points;
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"polygon": [[x,y],...], "points": [[x,y],...]}
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// 17 significant digits, so parsing gives back the same double.
std::string format_number(double v);

// Deterministic 64-bit generator; identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

enum class Family { kConvex, kStar, kComb, kRandom };

Family parse_family(const std::string& name);
std::vector<Point2> generate_polygon(Family family, int n, Rng& rng);
// Uniform samples: triangle chosen by area, then uniform inside it.
std::vector<Point2> sample_points(const std::vector<Point2>& polygon, int m, Rng& rng);
Instance generate_instance(Family family, int n, int m, std::uint64_t seed);

}  // namespace gtc

#endif  // GTC_INSTANCE_HPP

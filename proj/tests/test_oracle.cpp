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

#include <gtest/gtest.h>

#include <cmath>

#include "gtc/oracle.hpp"
#include "support.hpp"

namespace gtc {
namespace {

TEST(OracleDistance, Examples) {
  SimplePolygon sq(testing::square4()), ell(testing::ell6());
  EXPECT_NEAR(oracle_distance(sq, {1, 1}, {3, 3}), 2 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(oracle_distance(ell, {3, 1}, {1, 3}), 2 * std::sqrt(2.0), 1e-12);
  // x + y = 3.5 never enters the notch.
  EXPECT_NEAR(oracle_distance(ell, {3, 0.5}, {0.5, 3}), 2.5 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(oracle_distance(ell, {3.5, 0.5}, {0.5, 3.5}), 3 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(oracle_distance(ell, {3, 1}, {0, 4}), 3 * std::sqrt(2.0), 1e-12);
  EXPECT_THROW(oracle_distance(ell, {3, 3}, {1, 1}), PointOutsidePolygon);
}

TEST(OracleDistance, Symmetric) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto inst = testing::random_instance(seed, 20, 4);
    SimplePolygon P(inst.polygon);
    const auto& q = inst.points;
    EXPECT_NEAR(oracle_distance(P, q[0], q[1]), oracle_distance(P, q[1], q[0]), 1e-12);
    // Triangle inequality through a third point.
    EXPECT_LE(oracle_distance(P, q[0], q[2]), oracle_distance(P, q[0], q[1]) + oracle_distance(P, q[1], q[2]) + 1e-12);
  }
}

TEST(OracleOneCenter, Examples) {
  SimplePolygon sq(testing::square4()), ell(testing::ell6());
  EXPECT_LE(oracle_one_center(sq, {{1, 1}}).radius, 1e-4);
  auto bent = oracle_one_center(ell, {{3, 1}, {1, 3}});
  EXPECT_NEAR(bent.radius, std::sqrt(2.0), 1e-4);
  EXPECT_LE(dist(bent.center, {2, 2}), 1e-3);
  auto tri3 = oracle_one_center(sq, {{1, 1}, {1, 3}, {3, 3}});
  EXPECT_NEAR(tri3.radius, std::sqrt(2.0), 1e-4);
}

TEST(OracleTwoCenter, Examples) {
  auto a = oracle_two_center(SimplePolygon(testing::square4()), testing::qsym());
  EXPECT_NEAR(a.radius, 1.0, 1e-4);
  EXPECT_TRUE(a.consistent);
  auto b = oracle_two_center(SimplePolygon(testing::ell6()), testing::arms());
  EXPECT_NEAR(b.radius, 0.25, 1e-4);
  EXPECT_EQ(b.assignment[0], b.assignment[1]);
  EXPECT_NE(b.assignment[0], b.assignment[2]);
}

TEST(OracleTwoCenter, TooLarge) {
  std::vector<Point2> Q;
  for (int t = 0; t < 13; ++t) Q.push_back({0.2 + 0.25 * t, 1.0});
  EXPECT_THROW(oracle_two_center(SimplePolygon(testing::square4()), Q), TooLarge);
}

TEST(OracleTwoCenter, SelfConsistentAndDeterministic) {
  auto inst = testing::random_instance(3, 14, 6);
  SimplePolygon P(inst.polygon);
  auto a = oracle_two_center(P, inst.points), b = oracle_two_center(P, inst.points);
  EXPECT_TRUE(a.consistent);
  EXPECT_LE(testing::rel_err(a.radius, a.candidate_radius), 1e-4);
  EXPECT_EQ(a.radius, b.radius);
  EXPECT_EQ(a.assignment, b.assignment);
}

TEST(OracleTwoCenter, RestrictedNeverBeatsFree) {
  auto inst = testing::random_instance(4, 12, 5);
  SimplePolygon P(inst.polygon);
  auto free = oracle_two_center(P, inst.points);
  std::vector<int> forced(inst.points.size(), 0);
  forced[0] = 1;
  forced[1] = 1;
  auto restricted = oracle_two_center_restricted(P, inst.points, forced);
  EXPECT_GE(restricted.radius, free.radius - 1e-9);
  EXPECT_EQ(restricted.assignment[0], 1);
  EXPECT_EQ(restricted.assignment[1], 1);
}

}  // namespace
}  // namespace gtc

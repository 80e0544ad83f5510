// Copyright 2026 The lpgap Authors
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

#include <random>

#include "doctest.h"
#include "lpgap/error.hpp"
#include "lpgap/tsp_oracle.hpp"
#include "lpgap/valleys.hpp"
#include "oracles.hpp"

using lpgap::BigInt;
using lpgap::Rational;
using lpgap::tsp::TspInstance;
using namespace lpgap::ilp;

using lpgap::testing::instance_from_matrix;
using lpgap::testing::random_cost_matrix;

TEST_CASE("uniform three-city instance") {
  const auto inst = lpgap::tsp::gen_valley_instance(3, 1, Rational(0), Rational(1));
  const Tour t = tsp_oracle(inst);
  CHECK(t.cost == 3);
  CHECK(lpgap::tsp::is_valid_tour(t.order, 3));
}

TEST_CASE("valley headline optima") {
  CHECK(tsp_oracle(lpgap::tsp::gen_valley_instance(4, 1, Rational(0), Rational(1))).cost == 4);
  CHECK(tsp_oracle(lpgap::tsp::gen_valley_instance(10, 1, Rational(0), Rational(1))).cost == 10);
  const Tour t = tsp_oracle(lpgap::tsp::gen_valley_instance(10, 2, Rational(0), Rational(1)));
  CHECK(t.method == OracleMethod::kHeldKarp);
  CHECK(t.cost == 10);
  CHECK(lpgap::tsp::is_valid_tour(t.order, 20));
}

TEST_CASE("oracle equals brute force on random instances") {
  std::mt19937_64 gen(8128);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + gen() % 7;
    const auto m = random_cost_matrix(gen, n);
    const TspInstance inst = instance_from_matrix(m);
    const Tour t = tsp_oracle(inst);
    CHECK(lpgap::tsp::is_valid_tour(t.order, n));
    CHECK(t.order.front() == 0);
    CHECK(t.cost == lpgap::testing::brute_force_tour(m));
    CHECK(t.cost == lpgap::tsp::tour_cost(inst, t.order));
  }
}

TEST_CASE("exhaustive and Held-Karp agree on overlapping sizes") {
  std::mt19937_64 gen(31337);
  for (std::size_t n = 2; n <= 10; ++n) {
    const TspInstance inst = instance_from_matrix(random_cost_matrix(gen, n));
    const Tour a = tsp_exhaustive(inst);
    const Tour b = tsp_held_karp(inst);
    CHECK(a.cost == b.cost);
    CHECK(lpgap::tsp::is_valid_tour(b.order, n));
    CHECK(lpgap::tsp::tour_cost(inst, b.order) == b.cost);
  }
}

TEST_CASE("huge costs fall back to exact rational search") {
  std::mt19937_64 gen(5);
  auto m = random_cost_matrix(gen, 6);
  m[0][1] = Rational(BigInt("1000000000000000000000000"));
  m[3][4] = Rational(BigInt(-7), BigInt(1000000007));
  const TspInstance inst = instance_from_matrix(m);
  CHECK(tsp_exhaustive(inst).cost == lpgap::testing::brute_force_tour(m));
  CHECK(tsp_held_karp(inst).cost == lpgap::testing::brute_force_tour(m));
}

TEST_CASE("size budgets are explicit") {
  const auto big = lpgap::tsp::gen_valley_instance(21, 1, Rational(0), Rational(1));
  CHECK_THROWS_AS(tsp_oracle(big), lpgap::BudgetExhausted);
  const auto mid = lpgap::tsp::gen_valley_instance(11, 1, Rational(0), Rational(1));
  CHECK_THROWS_AS(tsp_exhaustive(mid), lpgap::BudgetExhausted);
  CHECK(tsp_oracle(mid).cost == 11);
}

TEST_CASE("tour validity check") {
  CHECK(lpgap::tsp::is_valid_tour({2, 0, 1}, 3));
  CHECK_FALSE(lpgap::tsp::is_valid_tour({0, 0, 1}, 3));
  CHECK_FALSE(lpgap::tsp::is_valid_tour({0, 1}, 3));
  CHECK_FALSE(lpgap::tsp::is_valid_tour({0, 1, 3}, 3));
}

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

#include "doctest.h"
#include "lpgap/error.hpp"
#include "lpgap/gap.hpp"
#include "lpgap/tsp_oracle.hpp"

using lpgap::BigInt;
using lpgap::Rational;
using namespace lpgap::gap;
using lpgap::tsp::gen_valley_instance;

TEST_CASE("degree relaxation misses by the whole optimum on k=10, c=2") {
  const auto inst = gen_valley_instance(10, 2, Rational(0), Rational(1));
  const GapReport r = integrality_gap(inst, Relaxation::degree(), std::vector<Rational>{Rational(9)});
  CHECK(r.lp_value == 0);
  CHECK(r.ilp_value == 10);
  CHECK(r.gap == 10);
  CHECK_FALSE(r.gap_ratio.has_value());
  CHECK(r.variables_used == 380);
  CHECK(r.constraints_used == 40);
  REQUIRE(r.decision_answers.size() == 1);
  CHECK(r.decision_answers[0].lp == Answer::kYes);
  CHECK(r.decision_answers[0].ilp == Answer::kNo);
  CHECK_FALSE(r.decision_answers[0].agree);
  CHECK(r.disagreements() == 1);
  CHECK(lpgap::tsp::is_valid_tour(r.tour, 20));
}

TEST_CASE("valley cuts and cutting planes close the k=4 gap") {
  const auto inst = gen_valley_instance(4, 2, Rational(0), Rational(1));
  const GapReport cuts = integrality_gap(inst, Relaxation::with_cuts(lpgap::tsp::valley_subsets(inst)));
  CHECK(cuts.lp_value == 4);
  CHECK(cuts.ilp_value == 4);
  CHECK(cuts.gap == 0);
  REQUIRE(cuts.gap_ratio.has_value());
  CHECK(*cuts.gap_ratio == 1);
  CHECK(cuts.constraints_used == 20);
  CHECK(cuts.disagreements() == 0);

  const GapReport loop = integrality_gap(inst, Relaxation::cutting_plane(50));
  CHECK(loop.lp_value == 4);
  REQUIRE(loop.trace.has_value());
  CHECK(loop.rounds == loop.trace->rounds.size());
}

TEST_CASE("one city per valley has no gap") {
  const auto inst = gen_valley_instance(4, 1, Rational(0), Rational(1));
  const GapReport r = integrality_gap(inst, Relaxation::degree());
  CHECK(r.lp_value == 4);
  CHECK(r.ilp_value == 4);
  CHECK(r.gap == 0);
  // default thresholds: the integers between floor(lp) and ceil(ilp)
  REQUIRE(r.decision_answers.size() == 1);
  CHECK(r.decision_answers[0].threshold == 4);
}

TEST_CASE("default thresholds span the gap") {
  const auto inst = gen_valley_instance(4, 2, Rational(0), Rational(1));
  const GapReport r = integrality_gap(inst, Relaxation::degree());
  REQUIRE(r.decision_answers.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.decision_answers[i].threshold == static_cast<long>(i));
  CHECK(r.disagreements() == 4);
}

TEST_CASE("decision queries") {
  const auto inst = gen_valley_instance(4, 2, Rational(0), Rational(1));
  const Decision lp = decide_tour_at_most(inst, Rational(3), Via::kLpRelaxation);
  CHECK(lp.answer == Answer::kYes);
  CHECK(lp.value == 0);
  const Decision ilp = decide_tour_at_most(inst, Rational(3), Via::kIlp);
  CHECK(ilp.answer == Answer::kNo);
  CHECK(ilp.value == 4);
  CHECK(decide_tour_at_most(inst, Rational(4), Via::kIlp).answer == Answer::kYes);
  CHECK(decide_tour_at_most(inst, Rational(BigInt(7), BigInt(2)), Via::kIlp).answer == Answer::kNo);
  CHECK(decide_tour_at_most(inst, Rational(3), Via::kLpRelaxation,
                            Relaxation::with_cuts(lpgap::tsp::valley_subsets(inst)))
            .answer == Answer::kNo);
}

TEST_CASE("relaxation answers are sound one way") {
  // An ILP YES always implies an LP YES, since lp <= ilp.
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t c = 1; c <= 2; ++c) {
      const auto inst = gen_valley_instance(k, c, Rational(0), Rational(BigInt(3), BigInt(2)));
      const GapReport r = integrality_gap(inst, Relaxation::degree());
      CHECK(r.lp_value <= r.ilp_value);
      for (const DecisionAnswer& a : r.decision_answers) {
        if (a.ilp == Answer::kYes) CHECK(a.lp == Answer::kYes);
        CHECK(a.agree == !(a.lp == Answer::kYes && a.ilp == Answer::kNo));
      }
    }
  }
}

TEST_CASE("gap reports are deterministic") {
  const auto inst = gen_valley_instance(5, 2, Rational(0), Rational(1));
  const GapReport a = integrality_gap(inst, Relaxation::cutting_plane(20));
  const GapReport b = integrality_gap(inst, Relaxation::cutting_plane(20));
  CHECK(a.lp_value == b.lp_value);
  CHECK(a.tour == b.tour);
  REQUIRE(a.trace.has_value());
  CHECK(a.trace->cuts == b.trace->cuts);
}

TEST_CASE("instance descriptions and relaxation names") {
  const auto inst = gen_valley_instance(3, 2, Rational(0), Rational(1));
  CHECK(describe_instance(inst).find("k=3") != std::string::npos);
  CHECK(Relaxation::degree().describe() == "degree");
  CHECK(answer_name(Answer::kYes) == "YES");
}

TEST_CASE("oracle budget surfaces as BudgetExhausted") {
  const auto inst = gen_valley_instance(7, 3, Rational(0), Rational(1));
  CHECK_THROWS_AS(integrality_gap(inst, Relaxation::degree()), lpgap::BudgetExhausted);
}

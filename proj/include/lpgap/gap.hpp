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

#ifndef LPGAP_GAP_HPP_
#define LPGAP_GAP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpgap/rational.hpp"
#include "lpgap/tsp_instance.hpp"
#include "lpgap/tsp_oracle.hpp"
#include "lpgap/valleys.hpp"

namespace lpgap::gap {

struct Relaxation {
  enum class Kind { kDegree, kDegreeCuts, kCuttingPlane };
  Kind kind = Kind::kDegree;
  std::vector<std::vector<std::size_t>> cuts;  // kDegreeCuts
  std::size_t max_rounds = 50;                 // kCuttingPlane

  static Relaxation degree() { return {}; }
  static Relaxation with_cuts(std::vector<std::vector<std::size_t>> cuts) {
    return {Kind::kDegreeCuts, std::move(cuts), 0};
  }
  static Relaxation cutting_plane(std::size_t rounds) { return {Kind::kCuttingPlane, {}, rounds}; }

  std::string describe() const;
};

struct RelaxationSolve {
  Rational value;
  std::vector<Rational> point;
  std::size_t constraints = 0;
  std::size_t variables = 0;
  std::size_t rounds = 0;
  std::optional<tsp::CuttingPlaneTrace> trace;
};

RelaxationSolve solve_relaxation(const tsp::TspInstance& inst, const Relaxation& relaxation);

enum class Answer { kYes, kNo };
enum class Via { kLpRelaxation, kIlp };

std::string_view answer_name(Answer a);

struct DecisionAnswer {
  Rational threshold;
  Answer lp = Answer::kNo;
  Answer ilp = Answer::kNo;
  // False exactly when the relaxation says YES and the truth is NO.
  bool agree = true;
};

// Decision form used throughout: "is there a tour of cost <= X".
inline constexpr const char* kDecisionForm = "tour_cost <= X";

struct GapReport {
  std::string instance;
  std::string relaxation;
  Rational lp_value;
  Rational ilp_value;
  Rational gap;                      // ilp - lp
  std::optional<Rational> gap_ratio; // ilp / lp; unset when lp == 0
  std::size_t constraints_used = 0;
  std::size_t variables_used = 0;
  std::size_t rounds = 0;
  std::vector<std::size_t> tour;
  ilp::OracleMethod oracle = ilp::OracleMethod::kExhaustive;
  std::optional<tsp::CuttingPlaneTrace> trace;
  std::vector<DecisionAnswer> decision_answers;

  std::size_t disagreements() const;
};

std::string describe_instance(const tsp::TspInstance& inst);

// Thresholds default to every integer from floor(lp) to ceil(ilp) (at most
// 64 of them; otherwise just lp, ilp - 1 and ilp). Throws BudgetExhausted
// when the oracle cannot handle the instance.
GapReport integrality_gap(const tsp::TspInstance& inst, const Relaxation& relaxation,
                          std::optional<std::vector<Rational>> thresholds = std::nullopt);

struct Decision {
  Answer answer = Answer::kNo;
  Rational value;  // relaxation value or oracle cost the answer rests on
  Via via = Via::kIlp;
};

Decision decide_tour_at_most(const tsp::TspInstance& inst, const Rational& threshold, Via via,
                             const Relaxation& relaxation = Relaxation::degree());

}  // namespace lpgap::gap

#endif  // LPGAP_GAP_HPP_

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

#ifndef LPGAP_LP_HPP_
#define LPGAP_LP_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lpgap/rational.hpp"

namespace lpgap::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMaximize, kMinimize };

std::string_view relation_symbol(Relation rel);
std::string_view sense_name(Sense sense);

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Optimization over constraint rows plus per-variable bounds. Variables default
// to lower bound 0 and no upper bound.
struct LinearProgram {
  explicit LinearProgram(std::size_t num_vars = 1, Sense sense = Sense::kMaximize);

  std::size_t num_vars;
  Sense sense;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;

  std::size_t add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);

  // Throws ValidationError when the vectors disagree with num_vars or
  // num_vars is zero.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kBudgetExhausted };

std::string_view status_name(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> point;  // set when optimal
  Rational value;               // objective at point, when optimal
  std::size_t pivots = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Exact two-phase bounded simplex with Bland's rule. Pure function of `lp`.
LpOutcome solve_lp(const LinearProgram& lp);

struct Violation {
  enum class Kind { kConstraint, kLowerBound, kUpperBound };
  Kind kind;
  std::size_t index;  // constraint row or variable
  Rational amount;    // > 0
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
};

FeasibilityReport check_feasible(const LinearProgram& lp, const std::vector<Rational>& point);

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& point);

}  // namespace lpgap::lp

#endif  // LPGAP_LP_HPP_

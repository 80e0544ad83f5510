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

#include "lpgap/ilp.hpp"

#include <string>
#include <utility>

#include "lpgap/error.hpp"

namespace lpgap::ilp {

void IlpProblem::validate() const {
  base.validate();
  for (std::size_t v : integer_vars) {
    if (v >= base.num_vars) {
      throw ValidationError("integer variable index " + std::to_string(v) +
                            " out of range for " + std::to_string(base.num_vars) +
                            " variables");
    }
  }
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const IlpProblem& p, const IlpOptions& o) : problem_(p), options_(o) {}

  IlpOutcome run() {
    IlpOutcome out;
    lp::LinearProgram node = problem_.base;
    // Integer variables with fractional bounds tighten to the integer hull.
    for (std::size_t v : problem_.integer_vars) {
      node.lower[v] = Rational(node.lower[v].ceil());
      if (node.upper[v]) node.upper[v] = Rational(node.upper[v]->floor());
    }
    const bool finished = explore(std::move(node), /*root=*/true);
    out.nodes = nodes_;
    out.pivots = pivots_;
    if (root_unbounded_) {
      out.status = lp::LpStatus::kUnbounded;
      return out;
    }
    if (have_incumbent_) {
      out.point = incumbent_;
      out.value = incumbent_value_;
    }
    if (!finished) {
      out.status = lp::LpStatus::kBudgetExhausted;
    } else {
      out.status = have_incumbent_ ? lp::LpStatus::kOptimal : lp::LpStatus::kInfeasible;
    }
    return out;
  }

 private:
  bool better(const Rational& a, const Rational& b) const {
    return problem_.base.sense == lp::Sense::kMaximize ? a > b : a < b;
  }

  // Returns false once the node budget is spent.
  bool explore(lp::LinearProgram node, bool root) {
    if (nodes_ >= options_.node_limit) return false;
    ++nodes_;
    lp::LpOutcome relaxed = lp::solve_lp(node);
    pivots_ += relaxed.pivots;
    if (relaxed.status == lp::LpStatus::kInfeasible) return true;
    if (relaxed.status == lp::LpStatus::kUnbounded) {
      // Child regions are subsets of the root region, so only the root can
      // be unbounded.
      if (root) root_unbounded_ = true;
      return true;
    }
    if (have_incumbent_ && !better(relaxed.value, incumbent_value_)) return true;

    std::size_t branch_var = problem_.base.num_vars;
    Rational best_frac;
    for (std::size_t v : problem_.integer_vars) {
      Rational f = relaxed.point[v].frac();
      if (f.is_zero()) continue;
      if (branch_var == problem_.base.num_vars || f > best_frac ||
          (f == best_frac && v < branch_var)) {
        branch_var = v;
        best_frac = std::move(f);
      }
    }
    if (branch_var == problem_.base.num_vars) {
      incumbent_ = std::move(relaxed.point);
      incumbent_value_ = std::move(relaxed.value);
      have_incumbent_ = true;
      return true;
    }

    const Rational value = relaxed.point[branch_var];
    lp::LinearProgram down = node;
    down.upper[branch_var] = Rational(value.floor());
    if (!explore(std::move(down), false)) return false;
    node.lower[branch_var] = Rational(value.ceil());
    return explore(std::move(node), false);
  }

  const IlpProblem& problem_;
  const IlpOptions& options_;
  std::size_t nodes_ = 0;
  std::size_t pivots_ = 0;
  bool root_unbounded_ = false;
  bool have_incumbent_ = false;
  std::vector<Rational> incumbent_;
  Rational incumbent_value_;
};

}  // namespace

IlpOutcome solve_ilp(const IlpProblem& problem, const IlpOptions& options) {
  problem.validate();
  return BranchAndBound(problem, options).run();
}

}  // namespace lpgap::ilp

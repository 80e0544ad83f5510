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

#include "lpgap/lp.hpp"

#include <limits>
#include <string>
#include <utility>

#include "lpgap/error.hpp"

namespace lpgap::lp {

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual: return "<=";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kEqual: return "=";
  }
  return "?";
}

std::string_view sense_name(Sense sense) {
  return sense == Sense::kMaximize ? "maximize" : "minimize";
}

std::string_view status_name(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

LinearProgram::LinearProgram(std::size_t n, Sense s)
    : num_vars(n), sense(s), objective(n), lower(n), upper(n) {}

std::size_t LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation rel,
                                          Rational rhs) {
  constraints.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
  return constraints.size() - 1;
}

void LinearProgram::validate() const {
  if (num_vars == 0) throw ValidationError("linear program needs at least one variable");
  if (objective.size() != num_vars) {
    throw ValidationError("objective has " + std::to_string(objective.size()) +
                          " coefficients, expected " + std::to_string(num_vars));
  }
  if (lower.size() != num_vars || upper.size() != num_vars) {
    throw ValidationError("bound vectors must have num_vars entries");
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coeffs.size() != num_vars) {
      throw ValidationError("constraint " + std::to_string(i) + " has " +
                            std::to_string(constraints[i].coeffs.size()) +
                            " coefficients, expected " + std::to_string(num_vars));
    }
  }
}

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& point) {
  Rational value;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (!lp.objective[j].is_zero()) value += lp.objective[j] * point[j];
  }
  return value;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Bounded-variable primal simplex on the standard form
//   minimize c.x  subject to  T x = b,  0 <= x <= u
// where structural variables are shifted by their lower bounds, inequality
// rows carry a slack column and rows without a +1 slack get an artificial.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LinearProgram& lp) : lp_(lp) {}

  LpOutcome run() {
    LpOutcome out;
    for (std::size_t j = 0; j < lp_.num_vars; ++j) {
      if (lp_.upper[j] && *lp_.upper[j] < lp_.lower[j]) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
    }
    build();

    if (first_artificial_ < cols_) {
      std::vector<Rational> phase1(cols_);
      for (std::size_t j = first_artificial_; j < cols_; ++j) phase1[j] = 1;
      load_costs(phase1);
      optimize(/*allow_artificial=*/true);  // phase 1 is bounded below by 0
      Rational infeasibility;
      for (std::size_t j = first_artificial_; j < cols_; ++j) infeasibility += val_[j];
      if (infeasibility.sign() > 0) {
        out.status = LpStatus::kInfeasible;
        out.pivots = pivots_;
        return out;
      }
      // Artificials stay at zero from here on; basic ones leave through
      // degenerate pivots if a phase 2 direction touches their row.
      for (std::size_t j = first_artificial_; j < cols_; ++j) upper_[j] = Rational(0);
    }

    std::vector<Rational> phase2(cols_);
    for (std::size_t j = 0; j < lp_.num_vars; ++j) {
      phase2[j] = lp_.sense == Sense::kMaximize ? -lp_.objective[j] : lp_.objective[j];
    }
    load_costs(phase2);
    const bool bounded = optimize(/*allow_artificial=*/false);
    out.pivots = pivots_;
    if (!bounded) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
    out.status = LpStatus::kOptimal;
    out.point.resize(lp_.num_vars);
    for (std::size_t j = 0; j < lp_.num_vars; ++j) out.point[j] = lp_.lower[j] + val_[j];
    out.value = evaluate_objective(lp_, out.point);
    return out;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return tab_[r * cols_ + c]; }

  void build() {
    const std::size_t n = lp_.num_vars;
    rows_ = lp_.constraints.size();

    std::vector<Rational> rhs(rows_);
    std::vector<int> slack_sign(rows_, 0);
    std::vector<bool> negate(rows_, false);
    std::size_t slack_count = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Constraint& con = lp_.constraints[i];
      rhs[i] = con.rhs;
      for (std::size_t j = 0; j < n; ++j) {
        if (!con.coeffs[j].is_zero() && !lp_.lower[j].is_zero()) {
          rhs[i] -= con.coeffs[j] * lp_.lower[j];
        }
      }
      if (con.relation == Relation::kLessEqual) slack_sign[i] = 1;
      if (con.relation == Relation::kGreaterEqual) slack_sign[i] = -1;
      if (slack_sign[i] != 0) ++slack_count;
      negate[i] = rhs[i].sign() < 0;
    }

    std::vector<bool> needs_artificial(rows_);
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const int effective = negate[i] ? -slack_sign[i] : slack_sign[i];
      needs_artificial[i] = effective != 1;
      if (needs_artificial[i]) ++artificial_count;
    }

    first_artificial_ = n + slack_count;
    cols_ = first_artificial_ + artificial_count;
    tab_.assign(rows_ * cols_, Rational());
    val_.assign(cols_, Rational());
    upper_.assign(cols_, std::nullopt);
    at_upper_.assign(cols_, false);
    basis_.assign(rows_, kNone);
    row_of_.assign(cols_, kNone);

    for (std::size_t j = 0; j < n; ++j) {
      if (lp_.upper[j]) upper_[j] = *lp_.upper[j] - lp_.lower[j];
    }

    std::size_t next_slack = n;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Constraint& con = lp_.constraints[i];
      const Rational sign = negate[i] ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n; ++j) {
        if (!con.coeffs[j].is_zero()) at(i, j) = sign * con.coeffs[j];
      }
      std::size_t basic = kNone;
      if (slack_sign[i] != 0) {
        at(i, next_slack) = sign * Rational(slack_sign[i]);
        if (!needs_artificial[i]) basic = next_slack;
        ++next_slack;
      }
      if (needs_artificial[i]) {
        at(i, next_artificial) = 1;
        basic = next_artificial++;
      }
      basis_[i] = basic;
      row_of_[basic] = i;
      val_[basic] = negate[i] ? -rhs[i] : rhs[i];
    }
  }

  // Reduced costs d_j = c_j - sum_i c_{basis(i)} T_ij.
  void load_costs(const std::vector<Rational>& cost) {
    reduced_ = cost;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rational& t = at(i, j);
        if (!t.is_zero()) reduced_[j] -= cb * t;
      }
    }
  }

  bool fixed(std::size_t j) const { return upper_[j] && upper_[j]->is_zero(); }

  // Bland: lowest-index improving nonbasic column.
  std::size_t choose_entering(bool allow_artificial) const {
    const std::size_t limit = allow_artificial ? cols_ : first_artificial_;
    for (std::size_t j = 0; j < limit; ++j) {
      if (row_of_[j] != kNone || fixed(j)) continue;
      const int d = reduced_[j].sign();
      if ((!at_upper_[j] && d < 0) || (at_upper_[j] && d > 0)) return j;
    }
    return kNone;
  }

  // Returns false when the objective is unbounded below.
  bool optimize(bool allow_artificial) {
    for (;;) {
      const std::size_t enter = choose_entering(allow_artificial);
      if (enter == kNone) return true;
      const bool increase = !at_upper_[enter];

      // Ratio test. Ties go to the lowest-index leaving variable.
      std::size_t leave_row = kNone;
      bool leave_to_upper = false;
      Rational step;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& t = at(i, enter);
        if (t.is_zero()) continue;
        const std::size_t b = basis_[i];
        // Basic value moves at rate -t per unit increase of the entering column.
        const bool basic_decreases = increase ? t.sign() > 0 : t.sign() < 0;
        Rational limit;
        bool to_upper = false;
        if (basic_decreases) {
          limit = val_[b] / t.abs();
        } else if (upper_[b]) {
          limit = (*upper_[b] - val_[b]) / t.abs();
          to_upper = true;
        } else {
          continue;
        }
        if (leave_row == kNone || limit < step ||
            (limit == step && b < basis_[leave_row])) {
          leave_row = i;
          step = std::move(limit);
          leave_to_upper = to_upper;
        }
      }

      const bool can_flip = upper_[enter].has_value();
      if (leave_row == kNone && !can_flip) return false;
      const bool flip = can_flip && (leave_row == kNone || !(step < *upper_[enter]));
      if (flip) step = *upper_[enter];

      if (!step.is_zero()) {
        const Rational signed_step = increase ? step : -step;
        val_[enter] += signed_step;
        for (std::size_t i = 0; i < rows_; ++i) {
          const Rational& t = at(i, enter);
          if (!t.is_zero()) val_[basis_[i]] -= t * signed_step;
        }
      }

      if (flip) {
        at_upper_[enter] = increase;
        continue;
      }

      const std::size_t leaving = basis_[leave_row];
      val_[leaving] = leave_to_upper ? *upper_[leaving] : Rational(0);
      at_upper_[leaving] = leave_to_upper;
      at_upper_[enter] = false;
      pivot(leave_row, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const Rational inv = Rational(1) / at(r, c);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational& t = at(r, j);
      if (t.is_zero()) continue;
      t *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rational f = at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j : nz) at(i, j) -= f * at(r, j);
    }
    const Rational f = reduced_[c];
    if (!f.is_zero()) {
      for (std::size_t j : nz) reduced_[j] -= f * at(r, j);
    }
    row_of_[basis_[r]] = kNone;
    basis_[r] = c;
    row_of_[c] = r;
  }

  const LinearProgram& lp_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<Rational> tab_;
  std::vector<Rational> val_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<bool> at_upper_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_of_;
  std::vector<Rational> reduced_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();
  return BoundedSimplex(lp).run();
}

FeasibilityReport check_feasible(const LinearProgram& lp, const std::vector<Rational>& point) {
  lp.validate();
  if (point.size() != lp.num_vars) {
    throw ValidationError("point has " + std::to_string(point.size()) +
                          " coordinates, expected " + std::to_string(lp.num_vars));
  }
  FeasibilityReport report;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    Rational lhs;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      if (!con.coeffs[j].is_zero()) lhs += con.coeffs[j] * point[j];
    }
    Rational excess;
    switch (con.relation) {
      case Relation::kLessEqual: excess = lhs - con.rhs; break;
      case Relation::kGreaterEqual: excess = con.rhs - lhs; break;
      case Relation::kEqual: excess = (lhs - con.rhs).abs(); break;
    }
    if (excess.sign() > 0) {
      report.violations.push_back({Violation::Kind::kConstraint, i, std::move(excess)});
    }
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (point[j] < lp.lower[j]) {
      report.violations.push_back({Violation::Kind::kLowerBound, j, lp.lower[j] - point[j]});
    }
    if (lp.upper[j] && point[j] > *lp.upper[j]) {
      report.violations.push_back({Violation::Kind::kUpperBound, j, point[j] - *lp.upper[j]});
    }
  }
  return report;
}

}  // namespace lpgap::lp

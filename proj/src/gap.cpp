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

#include "lpgap/gap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lpgap/lp.hpp"

namespace lpgap::gap {

std::string Relaxation::describe() const {
  switch (kind) {
    case Kind::kDegree: return "degree";
    case Kind::kDegreeCuts: return "degree+cuts(" + std::to_string(cuts.size()) + ")";
    case Kind::kCuttingPlane: return "cutting-plane(" + std::to_string(max_rounds) + ")";
  }
  return "?";
}

std::string_view answer_name(Answer a) { return a == Answer::kYes ? "YES" : "NO"; }

std::string describe_instance(const tsp::TspInstance& inst) {
  std::ostringstream os;
  if (const auto& p = inst.params()) {
    os << "valleys(k=" << p->valleys << ",c=" << p->cities_per_valley << ",eps=" << p->intra_cost
       << ",M=" << p->crossing_cost << ")";
  } else {
    os << "custom(n=" << inst.size() << ")";
  }
  return os.str();
}

RelaxationSolve solve_relaxation(const tsp::TspInstance& inst, const Relaxation& relaxation) {
  RelaxationSolve out;
  if (relaxation.kind == Relaxation::Kind::kCuttingPlane) {
    tsp::CuttingPlaneTrace trace = tsp::cutting_plane_loop(inst, relaxation.max_rounds);
    out.value = trace.final_value();
    out.point = trace.final_point;
    out.constraints = trace.rounds.back().constraints;
    out.variables = inst.arc_count();
    out.rounds = trace.rounds.size();
    out.trace = std::move(trace);
    return out;
  }
  lp::LinearProgram prog = tsp::degree_lp(inst);
  for (const auto& subset : relaxation.cuts) {
    prog.constraints.push_back(tsp::subtour_cut(inst, subset));
  }
  lp::LpOutcome outcome = lp::solve_lp(prog);
  if (!outcome.optimal()) {
    throw std::logic_error("TSP relaxation reported " +
                           std::string(lp::status_name(outcome.status)));
  }
  out.value = outcome.value;
  out.point = std::move(outcome.point);
  out.constraints = prog.constraints.size();
  out.variables = prog.num_vars;
  out.rounds = 1;
  return out;
}

std::size_t GapReport::disagreements() const {
  return static_cast<std::size_t>(std::count_if(decision_answers.begin(), decision_answers.end(),
                                                [](const DecisionAnswer& d) { return !d.agree; }));
}

namespace {

std::vector<Rational> default_thresholds(const Rational& lp, const Rational& ilp) {
  const BigInt lo = lp.floor();
  const BigInt hi = ilp.ceil();
  std::vector<Rational> out;
  if (hi - lo <= 63) {
    for (BigInt x = lo; x <= hi; ++x) out.emplace_back(x);
    return out;
  }
  out = {lp, ilp - Rational(1), ilp};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GapReport integrality_gap(const tsp::TspInstance& inst, const Relaxation& relaxation,
                          std::optional<std::vector<Rational>> thresholds) {
  const ilp::Tour tour = ilp::tsp_oracle(inst);
  RelaxationSolve relaxed = solve_relaxation(inst, relaxation);

  GapReport report;
  report.instance = describe_instance(inst);
  report.relaxation = relaxation.describe();
  report.lp_value = relaxed.value;
  report.ilp_value = tour.cost;
  report.gap = report.ilp_value - report.lp_value;
  if (report.lp_value.sign() > 0) report.gap_ratio = report.ilp_value / report.lp_value;
  report.constraints_used = relaxed.constraints;
  report.variables_used = relaxed.variables;
  report.rounds = relaxed.rounds;
  report.tour = tour.order;
  report.oracle = tour.method;
  report.trace = std::move(relaxed.trace);

  for (const Rational& x : thresholds ? *thresholds : default_thresholds(report.lp_value, report.ilp_value)) {
    DecisionAnswer d;
    d.threshold = x;
    d.lp = report.lp_value <= x ? Answer::kYes : Answer::kNo;
    d.ilp = report.ilp_value <= x ? Answer::kYes : Answer::kNo;
    d.agree = !(d.lp == Answer::kYes && d.ilp == Answer::kNo);
    report.decision_answers.push_back(std::move(d));
  }
  return report;
}

Decision decide_tour_at_most(const tsp::TspInstance& inst, const Rational& threshold, Via via,
                             const Relaxation& relaxation) {
  Decision d;
  d.via = via;
  d.value = via == Via::kIlp ? ilp::tsp_oracle(inst).cost : solve_relaxation(inst, relaxation).value;
  d.answer = d.value <= threshold ? Answer::kYes : Answer::kNo;
  return d;
}

}  // namespace lpgap::gap

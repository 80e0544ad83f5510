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

#ifndef LPGAP_VALLEYS_HPP_
#define LPGAP_VALLEYS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "lpgap/lp.hpp"
#include "lpgap/rational.hpp"
#include "lpgap/tsp_instance.hpp"

namespace lpgap::tsp {

// Valley-major numbering: city v*c + t is the t-th city of valley v. Arcs
// inside a valley cost `intra_cost`, all others `crossing_cost`.
TspInstance gen_valley_instance(std::size_t valleys, std::size_t cities_per_valley,
                                const Rational& intra_cost, const Rational& crossing_cost);

// One variable per arc in [0, 1] (TspInstance::arc_index order), out-degree
// rows for every city then in-degree rows, minimize total cost.
lp::LinearProgram degree_lp(const TspInstance& inst);

// Sum of x over arcs leaving `subset` >= 1. Requires 2 <= |subset| <= n-1.
lp::Constraint subtour_cut(const TspInstance& inst, const std::vector<std::size_t>& subset);

// Flow out of `subset` under an arc-indexed point.
Rational cut_value(const TspInstance& inst, const std::vector<std::size_t>& subset,
                   const std::vector<Rational>& point);

struct SeparationResult {
  std::vector<std::size_t> subset;  // ascending, contains the lowest city of its side
  Rational cut_value;
  enum class Method { kComponents, kMinCut } method;
};

// Weakly connected components of the support graph first; when the support
// is connected, an exact global minimum cut on symmetrized arc weights.
// Returns nullopt when every cut carries at least 1.
std::optional<SeparationResult> separate_subtour(const TspInstance& inst,
                                                 const std::vector<Rational>& point);

struct CuttingPlaneRound {
  std::size_t round = 0;
  Rational lp_value;
  std::size_t constraints = 0;  // rows in the program solved this round
  bool integral = false;
  std::optional<SeparationResult> cut;  // cut added after this round
};

struct CuttingPlaneTrace {
  std::vector<CuttingPlaneRound> rounds;
  std::vector<std::vector<std::size_t>> cuts;
  bool complete = false;  // stopped because separation found nothing
  std::vector<Rational> final_point;

  const Rational& final_value() const { return rounds.back().lp_value; }
  bool final_integral() const { return rounds.back().integral; }
};

// Solve, separate, add one cut, repeat; at most `max_rounds` LP solves.
CuttingPlaneTrace cutting_plane_loop(const TspInstance& inst, std::size_t max_rounds);

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational weight;
};

struct FlowSolution {
  std::vector<FlowArc> arcs;

  // Sum of weight * cost. Validates arcs against `inst`.
  Rational total_cost(const TspInstance& inst) const;
  // Arc-indexed point for the degree relaxation.
  std::vector<Rational> to_point(const TspInstance& inst) const;
};

// Throws ValidationError on out-of-range cities, self-loops, duplicate arcs
// or weights outside [0, 1].
void validate_flow(const TspInstance& inst, const FlowSolution& flow);

struct DegreeViolation {
  std::size_t city = 0;
  Rational out_flow;
  Rational in_flow;
};

struct CutCheck {
  std::vector<std::size_t> subset;
  Rational value;
  bool violated = false;
};

struct FlowReport {
  bool degree_ok = true;
  std::vector<DegreeViolation> degree_violations;
  std::vector<CutCheck> cuts;
  Rational total_cost;
  Rational crossing_cost;  // part of total_cost on arcs between valleys
  Rational crossing_weight;
  std::size_t violated_cuts() const;
};

FlowReport check_flow_feasibility(const TspInstance& inst, const FlowSolution& flow,
                                  const std::vector<std::vector<std::size_t>>& cut_subsets = {});

// Each valley's cities as one subset, in valley order.
std::vector<std::vector<std::size_t>> valley_subsets(const TspInstance& inst);

// Every valley circulates internally with weight 1 (a directed cycle through
// its cities). Needs at least 2 cities per valley.
FlowSolution internal_cycles_witness(const TspInstance& inst);

// Three circulations of weight 1/3. Circulation r visits every valley except
// skipped[r] in ascending order, crossing k-1 mountain passes; skipped[r]
// circulates internally. Needs 3 distinct skipped valleys, k >= 3 and at
// least 2 cities per valley.
FlowSolution three_circulation_witness(const TspInstance& inst,
                                       const std::vector<std::size_t>& skipped);

// Unit flow along a tour.
FlowSolution tour_flow(const std::vector<std::size_t>& order);

}  // namespace lpgap::tsp

#endif  // LPGAP_VALLEYS_HPP_

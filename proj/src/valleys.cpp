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

#include "lpgap/valleys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lpgap/error.hpp"

namespace lpgap::tsp {

TspInstance gen_valley_instance(std::size_t valleys, std::size_t cities_per_valley,
                                const Rational& intra_cost, const Rational& crossing_cost) {
  if (valleys < 2) throw ValidationError("valley instance needs k >= 2 valleys");
  if (cities_per_valley < 1) throw ValidationError("valley instance needs c >= 1 cities per valley");
  if (intra_cost.sign() < 0) throw ValidationError("intra-valley cost must be >= 0");
  if (!(crossing_cost > intra_cost)) {
    throw ValidationError("crossing cost must exceed intra-valley cost");
  }
  const std::size_t n = valleys * cities_per_valley;
  std::vector<std::size_t> valley_of(n);
  for (std::size_t i = 0; i < n; ++i) valley_of[i] = i / cities_per_valley;
  std::vector<Rational> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      cost[i * n + j] = valley_of[i] == valley_of[j] ? intra_cost : crossing_cost;
    }
  }
  return TspInstance(n, std::move(valley_of), std::move(cost),
                     ValleyParams{valleys, cities_per_valley, intra_cost, crossing_cost});
}

lp::LinearProgram degree_lp(const TspInstance& inst) {
  const std::size_t n = inst.size();
  lp::LinearProgram prog(inst.arc_count(), lp::Sense::kMinimize);
  for (std::size_t a = 0; a < inst.arc_count(); ++a) {
    const auto [from, to] = inst.arc_at(a);
    prog.objective[a] = inst.cost(from, to);
    prog.upper[a] = Rational(1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(inst.arc_count());
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row[inst.arc_index(i, j)] = 1;
    }
    prog.add_constraint(std::move(row), lp::Relation::kEqual, Rational(1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(inst.arc_count());
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) row[inst.arc_index(i, j)] = 1;
    }
    prog.add_constraint(std::move(row), lp::Relation::kEqual, Rational(1));
  }
  return prog;
}

namespace {

std::vector<bool> membership(const TspInstance& inst, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(inst.size(), false);
  for (std::size_t c : subset) {
    if (c >= inst.size()) {
      throw ValidationError("city " + std::to_string(c) + " out of range");
    }
    if (in[c]) throw ValidationError("city " + std::to_string(c) + " repeated in subset");
    in[c] = true;
  }
  return in;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(n, false);
  for (std::size_t c : subset) in[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> canonical_side(std::size_t n, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  if (!subset.empty() && subset.front() != 0) return complement(n, subset);
  return subset;
}

}  // namespace

lp::Constraint subtour_cut(const TspInstance& inst, const std::vector<std::size_t>& subset) {
  const std::size_t n = inst.size();
  if (subset.size() < 2 || subset.size() + 1 > n) {
    throw ValidationError("subtour cut subset size " + std::to_string(subset.size()) +
                          " outside [2, " + std::to_string(n - 1) + "]");
  }
  const std::vector<bool> in = membership(inst, subset);
  lp::Constraint cut;
  cut.coeffs.assign(inst.arc_count(), Rational());
  cut.relation = lp::Relation::kGreaterEqual;
  cut.rhs = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in[j]) cut.coeffs[inst.arc_index(i, j)] = 1;
    }
  }
  return cut;
}

Rational cut_value(const TspInstance& inst, const std::vector<std::size_t>& subset,
                   const std::vector<Rational>& point) {
  if (point.size() != inst.arc_count()) {
    throw ValidationError("point has " + std::to_string(point.size()) + " entries, expected " +
                          std::to_string(inst.arc_count()));
  }
  const std::vector<bool> in = membership(inst, subset);
  Rational value;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!in[i]) continue;
    for (std::size_t j = 0; j < inst.size(); ++j) {
      if (!in[j]) value += point[inst.arc_index(i, j)];
    }
  }
  return value;
}

namespace {

std::vector<std::vector<std::size_t>> support_components(const TspInstance& inst,
                                                         const std::vector<Rational>& point) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t a = 0; a < inst.arc_count(); ++a) {
    if (point[a].sign() <= 0) continue;
    const auto [from, to] = inst.arc_at(a);
    const std::size_t ra = find(from);
    const std::size_t rb = find(to);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// Stoer-Wagner global minimum cut on symmetric exact weights.
std::vector<std::size_t> stoer_wagner(std::vector<std::vector<Rational>> w) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  std::optional<Rational> best;
  std::vector<std::size_t> best_side;
  while (active.size() > 1) {
    std::vector<bool> added(n, false);
    std::vector<Rational> key(n);
    std::size_t prev = active[0];
    std::size_t last = active[0];
    added[last] = true;
    for (std::size_t v : active) key[v] = w[last][v];
    for (std::size_t step = 1; step < active.size(); ++step) {
      std::size_t pick = n;
      for (std::size_t v : active) {
        if (added[v]) continue;
        if (pick == n || key[v] > key[pick]) pick = v;
      }
      prev = last;
      last = pick;
      added[pick] = true;
      for (std::size_t v : active) {
        if (!added[v]) key[v] += w[pick][v];
      }
    }
    if (!best || key[last] < *best) {
      best = key[last];
      best_side = members[last];
    }
    for (std::size_t v : active) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    active.erase(std::find(active.begin(), active.end(), last));
  }
  return best_side;
}

}  // namespace

std::optional<SeparationResult> separate_subtour(const TspInstance& inst,
                                                 const std::vector<Rational>& point) {
  const std::size_t n = inst.size();
  if (point.size() != inst.arc_count()) {
    throw ValidationError("point has " + std::to_string(point.size()) + " entries, expected " +
                          std::to_string(inst.arc_count()));
  }
  if (n < 3) return std::nullopt;

  const auto components = support_components(inst, point);
  if (components.size() > 1) {
    std::optional<SeparationResult> best;
    for (const auto& comp : components) {
      if (comp.size() < 2 || comp.size() + 1 > n) continue;
      Rational value = cut_value(inst, comp, point);
      if (value >= 1) continue;
      if (!best || value < best->cut_value) {
        best = SeparationResult{comp, std::move(value), SeparationResult::Method::kComponents};
      }
    }
    if (best) return best;
  }

  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < inst.arc_count(); ++a) {
    if (point[a].is_zero()) continue;
    const auto [from, to] = inst.arc_at(a);
    w[from][to] += point[a];
    w[to][from] += point[a];
  }
  std::vector<std::size_t> side = canonical_side(n, stoer_wagner(std::move(w)));
  if (side.size() < 2 || side.size() + 1 > n) return std::nullopt;
  Rational value = cut_value(inst, side, point);
  if (value >= 1) return std::nullopt;
  return SeparationResult{std::move(side), std::move(value), SeparationResult::Method::kMinCut};
}

CuttingPlaneTrace cutting_plane_loop(const TspInstance& inst, std::size_t max_rounds) {
  if (max_rounds < 1) throw ValidationError("cutting-plane loop needs max_rounds >= 1");
  CuttingPlaneTrace trace;
  lp::LinearProgram prog = degree_lp(inst);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    lp::LpOutcome outcome = lp::solve_lp(prog);
    if (!outcome.optimal()) {
      // Degree rows plus subtour cuts always admit every tour.
      throw std::logic_error("TSP relaxation reported " +
                             std::string(lp::status_name(outcome.status)));
    }
    CuttingPlaneRound entry;
    entry.round = round;
    entry.lp_value = outcome.value;
    entry.constraints = prog.constraints.size();
    entry.integral = std::all_of(outcome.point.begin(), outcome.point.end(),
                                 [](const Rational& v) { return v.is_integer(); });
    entry.cut = separate_subtour(inst, outcome.point);
    trace.final_point = std::move(outcome.point);
    const bool more = entry.cut.has_value();
    if (more && round + 1 < max_rounds) {
      prog.constraints.push_back(subtour_cut(inst, entry.cut->subset));
      trace.cuts.push_back(entry.cut->subset);
    }
    trace.rounds.push_back(std::move(entry));
    if (!more) {
      trace.complete = true;
      break;
    }
  }
  return trace;
}

void validate_flow(const TspInstance& inst, const FlowSolution& flow) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const FlowArc& arc : flow.arcs) {
    if (arc.from >= inst.size() || arc.to >= inst.size()) {
      throw ValidationError("flow arc (" + std::to_string(arc.from) + ", " +
                            std::to_string(arc.to) + ") references a missing city");
    }
    if (arc.from == arc.to) {
      throw ValidationError("flow arc on city " + std::to_string(arc.from) + " is a self-loop");
    }
    if (arc.weight.sign() < 0 || arc.weight > 1) {
      throw ValidationError("flow arc weight " + arc.weight.str() + " outside [0, 1]");
    }
    if (!seen.emplace(arc.from, arc.to).second) {
      throw ValidationError("flow arc (" + std::to_string(arc.from) + ", " +
                            std::to_string(arc.to) + ") listed twice");
    }
  }
}

Rational FlowSolution::total_cost(const TspInstance& inst) const {
  validate_flow(inst, *this);
  Rational total;
  for (const FlowArc& arc : arcs) total += arc.weight * inst.cost(arc.from, arc.to);
  return total;
}

std::vector<Rational> FlowSolution::to_point(const TspInstance& inst) const {
  validate_flow(inst, *this);
  std::vector<Rational> point(inst.arc_count());
  for (const FlowArc& arc : arcs) point[inst.arc_index(arc.from, arc.to)] = arc.weight;
  return point;
}

std::size_t FlowReport::violated_cuts() const {
  return static_cast<std::size_t>(
      std::count_if(cuts.begin(), cuts.end(), [](const CutCheck& c) { return c.violated; }));
}

FlowReport check_flow_feasibility(const TspInstance& inst, const FlowSolution& flow,
                                  const std::vector<std::vector<std::size_t>>& cut_subsets) {
  validate_flow(inst, flow);
  const std::size_t n = inst.size();
  FlowReport report;
  std::vector<Rational> out(n);
  std::vector<Rational> in(n);
  for (const FlowArc& arc : flow.arcs) {
    out[arc.from] += arc.weight;
    in[arc.to] += arc.weight;
    const Rational cost = arc.weight * inst.cost(arc.from, arc.to);
    report.total_cost += cost;
    if (inst.valley_of(arc.from) != inst.valley_of(arc.to)) {
      report.crossing_cost += cost;
      report.crossing_weight += arc.weight;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i] != 1 || in[i] != 1) {
      report.degree_ok = false;
      report.degree_violations.push_back({i, out[i], in[i]});
    }
  }
  const std::vector<Rational> point = flow.to_point(inst);
  for (const auto& subset : cut_subsets) {
    subtour_cut(inst, subset);  // validates the subset
    CutCheck check;
    check.subset = subset;
    check.value = cut_value(inst, subset, point);
    check.violated = check.value < 1;
    report.cuts.push_back(std::move(check));
  }
  return report;
}

std::vector<std::vector<std::size_t>> valley_subsets(const TspInstance& inst) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < inst.valley_count(); ++v) out.push_back(inst.valley_cities(v));
  return out;
}

namespace {

class FlowBuilder {
 public:
  void add(std::size_t from, std::size_t to, const Rational& w) { weights_[{from, to}] += w; }

  void add_cycle(const std::vector<std::size_t>& cities, const Rational& w) {
    for (std::size_t i = 0; i < cities.size(); ++i) add(cities[i], cities[(i + 1) % cities.size()], w);
  }

  FlowSolution build() const {
    FlowSolution flow;
    for (const auto& [arc, w] : weights_) flow.arcs.push_back({arc.first, arc.second, w});
    return flow;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, Rational> weights_;
};

void require_two_per_valley(const TspInstance& inst) {
  for (std::size_t v = 0; v < inst.valley_count(); ++v) {
    if (inst.valley_cities(v).size() < 2) {
      throw ValidationError("valley " + std::to_string(v) +
                            " has fewer than 2 cities; it cannot circulate internally");
    }
  }
}

}  // namespace

FlowSolution internal_cycles_witness(const TspInstance& inst) {
  require_two_per_valley(inst);
  FlowBuilder b;
  for (const auto& cities : valley_subsets(inst)) b.add_cycle(cities, Rational(1));
  return b.build();
}

FlowSolution three_circulation_witness(const TspInstance& inst,
                                       const std::vector<std::size_t>& skipped) {
  const std::size_t k = inst.valley_count();
  if (k < 3) throw ValidationError("three-circulation witness needs at least 3 valleys");
  if (skipped.size() != 3) throw ValidationError("three-circulation witness skips exactly 3 valleys");
  std::set<std::size_t> distinct(skipped.begin(), skipped.end());
  if (distinct.size() != 3 || *distinct.rbegin() >= k) {
    throw ValidationError("skipped valleys must be 3 distinct valley indices below " +
                          std::to_string(k));
  }
  require_two_per_valley(inst);
  const Rational third(BigInt(1), BigInt(3));
  const auto valleys = valley_subsets(inst);
  FlowBuilder b;
  for (std::size_t skip : skipped) {
    std::vector<std::size_t> tour;
    for (std::size_t v = 0; v < k; ++v) {
      if (v == skip) continue;
      tour.insert(tour.end(), valleys[v].begin(), valleys[v].end());
    }
    b.add_cycle(tour, third);
    b.add_cycle(valleys[skip], third);
  }
  return b.build();
}

FlowSolution tour_flow(const std::vector<std::size_t>& order) {
  FlowBuilder b;
  b.add_cycle(order, Rational(1));
  return b.build();
}

}  // namespace lpgap::tsp

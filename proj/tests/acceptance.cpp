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

// Acceptance driver: one PASS/FAIL line per criterion, each checked
// exactly and against its wall-clock limit. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpgap/gap.hpp"
#include "lpgap/hull2d.hpp"
#include "lpgap/space.hpp"
#include "lpgap/tsp_oracle.hpp"
#include "lpgap/valleys.hpp"
#include "oracles.hpp"

namespace {

using lpgap::BigInt;
using lpgap::Rational;
namespace tsp = lpgap::tsp;
namespace gap = lpgap::gap;
namespace hull = lpgap::hull;

// Thrown by expect(); carries the first failed check.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no limit
  std::function<std::string()> run;  // returns a short summary on success
};

tsp::TspInstance valleys(std::size_t k, std::size_t c) {
  return tsp::gen_valley_instance(k, c, Rational(0), Rational(1));
}

std::string headline() {
  const Rational ten = lpgap::ilp::tsp_oracle(valleys(10, 1)).cost;
  const Rational four = lpgap::ilp::tsp_oracle(valleys(4, 1)).cost;
  expect(ten == 10, "k=10 optimum is " + ten.str());
  expect(four == 4, "k=4 optimum is " + four.str());
  return "optimum(k=10)=" + ten.str() + " optimum(k=4)=" + four.str();
}

std::string fractional_below_integer() {
  const auto inst = valleys(10, 2);
  const gap::GapReport r =
      gap::integrality_gap(inst, gap::Relaxation::degree(), std::vector<Rational>{Rational(9)});
  expect(r.lp_value == 0, "lp_value is " + r.lp_value.str());
  expect(r.ilp_value == 10, "ilp_value is " + r.ilp_value.str());
  expect(r.decision_answers.size() == 1 && !r.decision_answers[0].agree && r.disagreements() == 1,
         "report does not record the X=9 disagreement");
  const auto lp = gap::decide_tour_at_most(inst, Rational(9), gap::Via::kLpRelaxation);
  const auto ilp = gap::decide_tour_at_most(inst, Rational(9), gap::Via::kIlp);
  expect(lp.answer == gap::Answer::kYes, "LP does not answer YES at X=9");
  expect(ilp.answer == gap::Answer::kNo, "ILP does not answer NO at X=9");
  return "lp=" + r.lp_value.str() + " ilp=" + r.ilp_value.str() + " X=9: LP YES, ILP NO";
}

std::string three_circulations() {
  std::size_t witnesses = 0;
  for (std::size_t c : {2u, 3u}) {
    const auto inst = valleys(10, c);
    for (std::size_t a = 0; a < 10; ++a) {
      for (std::size_t b = a + 1; b < 10; ++b) {
        for (std::size_t d = b + 1; d < 10; ++d) {
          const auto w = tsp::three_circulation_witness(inst, {a, b, d});
          const auto r = tsp::check_flow_feasibility(inst, w, tsp::valley_subsets(inst));
          expect(r.degree_ok, "witness is not degree feasible");
          expect(r.crossing_weight == 9, "crossing weight " + r.crossing_weight.str());
          expect(r.crossing_cost == 9, "crossing cost " + r.crossing_cost.str());
          expect(r.total_cost == 9, "total cost " + r.total_cost.str());
          ++witnesses;
        }
      }
    }
  }
  return std::to_string(witnesses) + " witnesses, each crossing cost 3*(1/3)*9 = 9";
}

std::string missing_facet() {
  const auto big = hull::gen_arc(64);
  std::size_t positive = 0;
  for (std::size_t j = 0; j < big.facet_count(); ++j) {
    const auto r = hull::adversarial_objective(big, j);
    expect(r.gap.has_value() && *r.gap > 0, "no gap when omitting facet " + std::to_string(j));
    ++positive;
  }
  expect(positive == 63, "expected 63 omissions");
  const auto small = hull::adversarial_objective(hull::gen_arc(4), 1);
  expect(small.gap && *small.gap == 1, "V=4 gap is not 1");
  const Rational wx(BigInt(3), BigInt(2)), wy(BigInt(21), BigInt(2));
  expect(small.witness && small.witness->x == wx && small.witness->y == wy, "V=4 witness is not (3/2, 21/2)");
  return "V=64: 63/63 gaps > 0; V=4: gap 1 at (3/2, 21/2)";
}

std::string budget_scan() {
  const auto eight = hull::subset_gap_scan(hull::gen_arc(8), 6, 0, 0);
  expect(eight.rows.size() == 7 && eight.rows_with_gap() == 7,
         "V=8: " + std::to_string(eight.rows_with_gap()) + "/" + std::to_string(eight.rows.size()));
  const auto wide = hull::subset_gap_scan(hull::gen_arc(64), 32, 100, 2006);
  expect(wide.sampled && wide.rows.size() == 100, "V=64 did not draw 100 samples");
  expect(wide.rows_with_gap() == 100, "V=64: " + std::to_string(wide.rows_with_gap()) + "/100");
  return "V=8 m=6: 7/7; V=64 m=32 seed 2006: 100/100";
}

std::string cutting_plane() {
  const auto inst = valleys(4, 2);
  const auto t = tsp::cutting_plane_loop(inst, 50);
  const Rational opt = lpgap::ilp::tsp_oracle(inst).cost;
  expect(t.complete, "loop hit its round budget");
  expect(t.final_value() == 4 && opt == 4, "final " + t.final_value().str() + ", optimum " + opt.str());
  std::ostringstream trace;
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    if (i) {
      expect(t.rounds[i - 1].lp_value <= t.rounds[i].lp_value, "trace decreases");
      expect(t.rounds[i].constraints > t.rounds[i - 1].constraints, "constraint count not recorded");
    }
    trace << (i ? "," : "") << t.rounds[i].lp_value << "@" << t.rounds[i].constraints;
  }
  return "value@rows " + trace.str();
}

std::string solver_oracles() {
  std::mt19937_64 gen(4242);
  std::size_t optimal = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = lpgap::testing::random_program(gen);
    const auto truth = lpgap::testing::vertex_enumeration_optimum(p);
    const auto out = lpgap::lp::solve_lp(p);
    if (!truth) {
      expect(out.status == lpgap::lp::LpStatus::kInfeasible, "LP " + std::to_string(trial) + " status");
      continue;
    }
    expect(out.optimal() && out.value == *truth, "LP " + std::to_string(trial) + " value");
    ++optimal;
  }
  std::mt19937_64 tgen(8128);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + tgen() % 7;
    const auto m = lpgap::testing::random_cost_matrix(tgen, n);
    const Rational got = lpgap::ilp::tsp_oracle(lpgap::testing::instance_from_matrix(m)).cost;
    expect(got == lpgap::testing::brute_force_tour(m), "TSP " + std::to_string(trial));
  }
  return "1000 LPs (" + std::to_string(optimal) + " optimal, rest infeasible) and 200 TSPs match";
}

std::string storage_bounds() {
  BigInt p20 = 1;
  p20 <<= 20;
  BigInt fact = 1;
  for (int i = 2; i <= 10; ++i) fact *= i;
  const auto a = lpgap::space::min_symbols_single(p20).min_bits;
  const auto b = lpgap::space::min_symbols_single(fact).min_bits;
  const auto c = lpgap::space::min_symbols_subset(BigInt(16), BigInt(8)).min_bits;
  expect(a == 20, "2^20 -> " + std::to_string(a));
  expect(b == 22, "10! -> " + std::to_string(b));
  expect(c == 14, "C(16,8) -> " + std::to_string(c));
  const auto rows = lpgap::space::subset_growth(4, 12, 4);
  std::ostringstream bits;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) expect(rows[i].min_bits >= 2 * rows[i - 1].min_bits, "no doubling at n=" + std::to_string(rows[i].n));
    bits << (i ? "," : "") << rows[i].min_bits;
  }
  return "20, 22, 14; growth bits " + bits.str();
}

std::string model_demo() {
  const auto ints = lpgap::space::monotone_model_demo(Rational(0), Rational(8), Rational(1));
  expect(ints.grid_monotone && !ints.witness, "integer grid not monotone");
  const Rational half(BigInt(1), BigInt(2));
  const auto halves = lpgap::space::monotone_model_demo(Rational(0), Rational(8), half);
  expect(!halves.grid_monotone && halves.witness, "half-step grid reported monotone");
  expect(halves.witness->first == 0 && halves.witness->second == half, "witness is not (0, 1/2)");
  return "step 1: monotone; step 1/2: witness (0, 1/2), f(1/2)=" + halves.samples[1].approx.substr(0, 10);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "valley headline numbers", 5, headline},
      {2, "fractional-below-integer", 60, fractional_below_integer},
      {3, "three-circulation arithmetic", 0, three_circulations},
      {4, "missing-facet adversary", 5, missing_facet},
      {5, "budget scan", 30, budget_scan},
      {6, "cutting-plane closure", 30, cutting_plane},
      {7, "solver oracles", 60, solver_oracles},
      {8, "storage bounds", 5, storage_bounds},
      {9, "model-fidelity demo", 1, model_demo},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      detail = "over time limit; " + detail;
    }
    failed += ok ? 0 : 1;
    const std::string limit = c.limit_s > 0 ? "limit " + std::to_string(static_cast<int>(c.limit_s)) + " s" : "no limit";
    std::printf("%s criterion %d: %s (%.2f s, %s) %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, limit.c_str(),
                detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

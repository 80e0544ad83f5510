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

// Reference computations used only by tests. They share no code path with
// the solvers they check: vertex enumeration by exact Gaussian elimination,
// plain recursive permutation search and subset enumeration.
#ifndef LPGAP_TESTS_ORACLES_HPP_
#define LPGAP_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "lpgap/lp.hpp"
#include "lpgap/rational.hpp"
#include "lpgap/tsp_instance.hpp"

namespace lpgap::testing {

// One row of a linear system: coeffs . x = rhs.
struct Hyperplane {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Unique solution of a square system, or nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<Hyperplane> rows) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot].coeffs[col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r].coeffs[col].is_zero()) continue;
      const Rational f = rows[r].coeffs[col] / rows[col].coeffs[col];
      for (std::size_t c = 0; c < n; ++c) rows[r].coeffs[c] -= f * rows[col].coeffs[c];
      rows[r].rhs -= f * rows[col].rhs;
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rows[i].rhs / rows[i].coeffs[i];
  return x;
}

inline bool satisfies(const lp::LinearProgram& lp, const std::vector<Rational>& x) {
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    if (c.relation == lp::Relation::kLessEqual && lhs > c.rhs) return false;
    if (c.relation == lp::Relation::kGreaterEqual && lhs < c.rhs) return false;
    if (c.relation == lp::Relation::kEqual && lhs != c.rhs) return false;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (x[j] < lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  return true;
}

// Best objective over every basic point: each choice of num_vars tight
// constraints or bounds with a unique intersection. nullopt when no basic
// point is feasible. Valid for programs whose feasible region is bounded.
inline std::optional<Rational> vertex_enumeration_optimum(const lp::LinearProgram& lp) {
  std::vector<Hyperplane> planes;
  for (const auto& c : lp.constraints) planes.push_back({c.coeffs, c.rhs});
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    std::vector<Rational> e(lp.num_vars);
    e[j] = 1;
    planes.push_back({e, lp.lower[j]});
    if (lp.upper[j]) planes.push_back({e, *lp.upper[j]});
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == lp.num_vars) {
      std::vector<Hyperplane> rows;
      for (std::size_t p : pick) rows.push_back(planes[p]);
      auto x = solve_square(rows);
      if (!x || !satisfies(lp, *x)) return;
      Rational v;
      for (std::size_t j = 0; j < lp.num_vars; ++j) v += lp.objective[j] * (*x)[j];
      const bool better = !best || (lp.sense == lp::Sense::kMaximize ? v > *best : v < *best);
      if (better) best = v;
      return;
    }
    for (std::size_t p = from; p < planes.size(); ++p) {
      pick.push_back(p);
      rec(p + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

// Minimum closed-tour cost over all orders starting at city 0, by plain
// recursion over unvisited cities.
inline Rational brute_force_tour(const std::vector<std::vector<Rational>>& cost) {
  const std::size_t n = cost.size();
  std::optional<Rational> best;
  std::vector<bool> used(n, false);
  used[0] = true;
  std::function<void(std::size_t, std::size_t, Rational)> rec = [&](std::size_t at, std::size_t depth,
                                                                    Rational acc) {
    if (depth == n) {
      Rational total = acc + cost[at][0];
      if (!best || total < *best) best = total;
      return;
    }
    for (std::size_t next = 1; next < n; ++next) {
      if (used[next]) continue;
      used[next] = true;
      rec(next, depth + 1, acc + cost[at][next]);
      used[next] = false;
    }
  };
  rec(0, 1, Rational(0));
  return *best;
}

inline std::uint64_t draw(std::mt19937_64& gen, std::uint64_t bound) { return gen() % bound; }

inline long draw_between(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(draw(gen, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Random bounded program with <= 3 variables and <= 6 constraints.
inline lp::LinearProgram random_program(std::mt19937_64& gen) {
  const std::size_t n = 1 + draw(gen, 3);
  lp::LinearProgram prog(n, draw(gen, 2) ? lp::Sense::kMaximize : lp::Sense::kMinimize);
  for (auto& c : prog.objective) c = Rational(draw_between(gen, -5, 5));
  const bool boxed = draw(gen, 2) == 0;
  for (std::size_t j = 0; j < n; ++j) {
    prog.lower[j] = draw(gen, 3) == 0 ? Rational(draw_between(gen, -3, 2)) : Rational(0);
    if (boxed) prog.upper[j] = prog.lower[j] + Rational(draw_between(gen, 0, 6));
  }
  std::size_t m = 1 + draw(gen, 6);
  if (!boxed) {
    std::vector<Rational> ones(n, Rational(1));
    prog.add_constraint(ones, lp::Relation::kLessEqual, Rational(draw_between(gen, 0, 20)));
    --m;
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> coeffs(n);
    for (auto& c : coeffs) c = Rational(draw_between(gen, -5, 5));
    const std::uint64_t r = draw(gen, 5);
    const lp::Relation rel = r < 3 ? lp::Relation::kLessEqual
                             : r < 4 ? lp::Relation::kGreaterEqual
                                     : lp::Relation::kEqual;
    prog.add_constraint(std::move(coeffs), rel, Rational(draw_between(gen, -5, 10)));
  }
  return prog;
}

// Random asymmetric cost matrix with entries p/q, 0 <= p < 50, 1 <= q <= 4.
inline std::vector<std::vector<Rational>> random_cost_matrix(std::mt19937_64& gen, std::size_t n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long num = static_cast<long>(gen() % 50);
      const long den = static_cast<long>(gen() % 4) + 1;
      m[i][j] = Rational(BigInt(num), BigInt(den));
    }
  }
  return m;
}

inline tsp::TspInstance instance_from_matrix(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<Rational> flat;
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  return tsp::TspInstance(n, std::vector<std::size_t>(n, 0), flat);
}

}  // namespace lpgap::testing

#endif  // LPGAP_TESTS_ORACLES_HPP_

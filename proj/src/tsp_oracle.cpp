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

#include "lpgap/tsp_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "lpgap/error.hpp"

namespace lpgap::ilp {

std::string_view method_name(OracleMethod method) {
  return method == OracleMethod::kExhaustive ? "exhaustive" : "held_karp";
}

namespace {

// When every cost scales to a common-denominator integer small enough that
// any tour sum fits, the searches run on int64 and stay exact.
std::optional<std::vector<std::int64_t>> scaled_costs(const tsp::TspInstance& inst) {
  const std::size_t n = inst.size();
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), inst.cost(i, j).den().get_mpz_t());
    }
  }
  const BigInt limit = (BigInt(1) << 62) / BigInt(static_cast<unsigned long>(n));
  std::vector<std::int64_t> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& c = inst.cost(i, j);
      BigInt v = c.num() * (scale / c.den());
      if (abs(v) > limit) return std::nullopt;
      out[i * n + j] = v.get_si();
    }
  }
  return out;
}

std::vector<Rational> rational_costs(const tsp::TspInstance& inst) {
  return inst.cost_matrix();
}

template <class Cost>
std::vector<std::size_t> exhaustive_order(const std::vector<Cost>& cost, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best = perm;
  std::optional<Cost> best_cost;
  do {
    Cost total = cost[perm[n - 1] * n + perm[0]];
    for (std::size_t i = 0; i + 1 < n; ++i) total += cost[perm[i] * n + perm[i + 1]];
    if (!best_cost || total < *best_cost) {
      best_cost = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

template <class Cost>
std::vector<std::size_t> held_karp_order(const std::vector<Cost>& cost, std::size_t n) {
  // City 0 is the fixed start; cities 1..n-1 map to bits 0..m-1.
  const std::size_t m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<Cost> dp((full + 1) * m);
  std::vector<std::uint8_t> parent((full + 1) * m, 0);
  auto c = [&](std::size_t from, std::size_t to) -> const Cost& { return cost[from * n + to]; };

  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t prev = mask ^ (std::size_t{1} << j);
      if (prev == 0) {
        dp[mask * m + j] = c(0, j + 1);
        continue;
      }
      std::optional<Cost> best;
      std::uint8_t arg = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(prev & (std::size_t{1} << i))) continue;
        Cost v = dp[prev * m + i] + c(i + 1, j + 1);
        if (!best || v < *best) {
          best = std::move(v);
          arg = static_cast<std::uint8_t>(i);
        }
      }
      dp[mask * m + j] = std::move(*best);
      parent[mask * m + j] = arg;
    }
  }

  std::optional<Cost> best;
  std::size_t last = 0;
  for (std::size_t j = 0; j < m; ++j) {
    Cost v = dp[full * m + j] + c(j + 1, 0);
    if (!best || v < *best) {
      best = std::move(v);
      last = j;
    }
  }

  std::vector<std::size_t> reversed;
  std::size_t mask = full;
  std::size_t j = last;
  while (mask != 0) {
    reversed.push_back(j + 1);
    const std::size_t prev = mask ^ (std::size_t{1} << j);
    if (prev == 0) break;
    j = parent[mask * m + j];
    mask = prev;
  }
  std::vector<std::size_t> order{0};
  order.insert(order.end(), reversed.rbegin(), reversed.rend());
  return order;
}

Tour finish(const tsp::TspInstance& inst, std::vector<std::size_t> order, OracleMethod method) {
  Tour tour;
  tour.cost = tsp::tour_cost(inst, order);
  tour.order = std::move(order);
  tour.method = method;
  return tour;
}

}  // namespace

Tour tsp_exhaustive(const tsp::TspInstance& inst, std::size_t max_n) {
  const std::size_t n = inst.size();
  if (n > max_n) {
    throw BudgetExhausted("exhaustive TSP search limited to " + std::to_string(max_n) +
                          " cities, instance has " + std::to_string(n));
  }
  if (auto scaled = scaled_costs(inst)) {
    return finish(inst, exhaustive_order(*scaled, n), OracleMethod::kExhaustive);
  }
  return finish(inst, exhaustive_order(rational_costs(inst), n), OracleMethod::kExhaustive);
}

Tour tsp_held_karp(const tsp::TspInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kHeldKarpLimit) {
    throw BudgetExhausted("Held-Karp TSP search limited to " + std::to_string(kHeldKarpLimit) +
                          " cities, instance has " + std::to_string(n));
  }
  if (n == 2) return finish(inst, {0, 1}, OracleMethod::kHeldKarp);
  if (auto scaled = scaled_costs(inst)) {
    return finish(inst, held_karp_order(*scaled, n), OracleMethod::kHeldKarp);
  }
  return finish(inst, held_karp_order(rational_costs(inst), n), OracleMethod::kHeldKarp);
}

Tour tsp_oracle(const tsp::TspInstance& inst) {
  if (inst.size() <= kExhaustiveLimit) return tsp_exhaustive(inst);
  return tsp_held_karp(inst);
}

}  // namespace lpgap::ilp

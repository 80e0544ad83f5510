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

#ifndef LPGAP_TSP_ORACLE_HPP_
#define LPGAP_TSP_ORACLE_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "lpgap/rational.hpp"
#include "lpgap/tsp_instance.hpp"

namespace lpgap::ilp {

inline constexpr std::size_t kExhaustiveLimit = 10;
inline constexpr std::size_t kHeldKarpLimit = 20;

enum class OracleMethod { kExhaustive, kHeldKarp };

std::string_view method_name(OracleMethod method);

struct Tour {
  std::vector<std::size_t> order;  // starts at city 0
  Rational cost;
  OracleMethod method = OracleMethod::kExhaustive;
};

// Enumerates all (n-1)! orders with city 0 fixed first. Ties keep the
// lexicographically first order. Throws BudgetExhausted for n > max_n.
Tour tsp_exhaustive(const tsp::TspInstance& inst, std::size_t max_n = kExhaustiveLimit);

// Subset dynamic programming. Throws BudgetExhausted for n > kHeldKarpLimit.
Tour tsp_held_karp(const tsp::TspInstance& inst);

// Exhaustive for n <= 10, Held-Karp for n <= 20, BudgetExhausted above.
Tour tsp_oracle(const tsp::TspInstance& inst);

}  // namespace lpgap::ilp

#endif  // LPGAP_TSP_ORACLE_HPP_

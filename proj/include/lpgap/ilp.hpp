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

#ifndef LPGAP_ILP_HPP_
#define LPGAP_ILP_HPP_

#include <cstddef>
#include <vector>

#include "lpgap/lp.hpp"

namespace lpgap::ilp {

struct IlpProblem {
  lp::LinearProgram base;
  std::vector<std::size_t> integer_vars;

  void validate() const;
};

struct IlpOptions {
  std::size_t node_limit = 200000;
};

struct IlpOutcome : lp::LpOutcome {
  std::size_t nodes = 0;
};

// Depth-first branch-and-bound over solve_lp. Branches on the integer
// variable with the largest fractional part (lowest index on ties), down
// branch first. Exceeding node_limit yields kBudgetExhausted; the incumbent
// found so far, if any, is still reported in point/value.
IlpOutcome solve_ilp(const IlpProblem& problem, const IlpOptions& options = {});

}  // namespace lpgap::ilp

#endif  // LPGAP_ILP_HPP_

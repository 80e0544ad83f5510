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

#ifndef LPGAP_SPACE_HPP_
#define LPGAP_SPACE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpgap/rational.hpp"

namespace lpgap::space {

struct StorageBound {
  enum class Derivation { kSingleSolution, kSubsetOfSolutions };
  BigInt object_count;
  std::size_t min_bits = 0;  // ceil(log2(object_count))
  Derivation derivation = Derivation::kSingleSolution;
  // Subset bounds only: bits to list the m chosen solutions one by one,
  // m * ceil(log2(N)).
  std::optional<BigInt> list_bits;
};

std::string_view derivation_name(StorageBound::Derivation d);

// Smallest b with 2^b >= count, by exact integer arithmetic. count >= 1.
std::size_t ceil_log2(const BigInt& count);

// Bits needed to name one of k solutions. Throws ValidationError for k < 1.
StorageBound min_symbols_single(const BigInt& k);

// Bits needed to name one m-subset of N solutions. Throws ValidationError
// unless 1 <= N and 0 <= m <= N.
StorageBound min_symbols_subset(const BigInt& universe, const BigInt& chosen);

struct GrowthRow {
  std::size_t n = 0;
  BigInt universe;  // 2^n
  BigInt chosen;    // 2^n / d
  std::size_t min_bits = 0;
};

// min_symbols_subset(2^n, 2^n / divisor) for n in [n_from, n_to].
std::vector<GrowthRow> subset_growth(std::size_t n_from, std::size_t n_to, std::size_t divisor);

// f(x) = sin(2^x * pi) + x.
struct SampledValue {
  Rational x;
  std::string approx;  // decimal, 30 significant digits
  bool exact = false;  // symbolic: integer x >= 0
};

struct MonotoneDemo {
  std::vector<SampledValue> samples;
  bool grid_monotone = true;
  // First consecutive pair with f(first) > f(second).
  std::optional<std::pair<Rational, Rational>> witness;
};

// Samples f on start, start+step, ... <= end. Throws ValidationError for
// step <= 0, start > end, more than 100000 points, or x beyond [-64, 64].
MonotoneDemo monotone_model_demo(const Rational& start, const Rational& end, const Rational& step);

}  // namespace lpgap::space

#endif  // LPGAP_SPACE_HPP_

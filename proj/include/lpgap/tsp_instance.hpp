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

#ifndef LPGAP_TSP_INSTANCE_HPP_
#define LPGAP_TSP_INSTANCE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lpgap/rational.hpp"

namespace lpgap::tsp {

// Parameters of a generated valley instance.
struct ValleyParams {
  std::size_t valleys = 0;            // k
  std::size_t cities_per_valley = 0;  // c
  Rational intra_cost;                // epsilon
  Rational crossing_cost;             // M
};

// Directed TSP instance. cost(i, i) is stored but never used.
class TspInstance {
 public:
  TspInstance() = default;
  // Throws ValidationError if sizes disagree or n < 2.
  TspInstance(std::size_t n, std::vector<std::size_t> valley_of, std::vector<Rational> cost,
              std::optional<ValleyParams> params = std::nullopt);

  std::size_t size() const { return n_; }
  std::size_t valley_of(std::size_t city) const { return valley_of_[city]; }
  const std::vector<std::size_t>& valley_assignment() const { return valley_of_; }
  std::size_t valley_count() const;
  // Cities of valley v, ascending.
  std::vector<std::size_t> valley_cities(std::size_t v) const;

  const Rational& cost(std::size_t from, std::size_t to) const { return cost_[from * n_ + to]; }
  const std::vector<Rational>& cost_matrix() const { return cost_; }
  const std::optional<ValleyParams>& params() const { return params_; }

  // Index of arc (from, to), from != to, in the row-major order that skips
  // the diagonal. Arc variables of every relaxation use this numbering.
  std::size_t arc_index(std::size_t from, std::size_t to) const {
    return from * (n_ - 1) + (to < from ? to : to - 1);
  }
  std::size_t arc_count() const { return n_ * (n_ - 1); }
  std::pair<std::size_t, std::size_t> arc_at(std::size_t index) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> valley_of_;
  std::vector<Rational> cost_;
  std::optional<ValleyParams> params_;
};

// Cost of the closed tour visiting `order` then returning to order[0].
Rational tour_cost(const TspInstance& inst, const std::vector<std::size_t>& order);

// True iff `order` lists each of 0..n-1 exactly once.
bool is_valid_tour(const std::vector<std::size_t>& order, std::size_t n);

}  // namespace lpgap::tsp

#endif  // LPGAP_TSP_INSTANCE_HPP_

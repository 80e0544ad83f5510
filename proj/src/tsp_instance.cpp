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

#include "lpgap/tsp_instance.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lpgap/error.hpp"

namespace lpgap::tsp {

TspInstance::TspInstance(std::size_t n, std::vector<std::size_t> valley_of,
                         std::vector<Rational> cost, std::optional<ValleyParams> params)
    : n_(n), valley_of_(std::move(valley_of)), cost_(std::move(cost)), params_(std::move(params)) {
  if (n_ < 2) throw ValidationError("TSP instance needs at least 2 cities");
  if (valley_of_.size() != n_) {
    throw ValidationError("valley assignment has " + std::to_string(valley_of_.size()) +
                          " entries, expected " + std::to_string(n_));
  }
  if (cost_.size() != n_ * n_) {
    throw ValidationError("cost matrix has " + std::to_string(cost_.size()) +
                          " entries, expected " + std::to_string(n_ * n_));
  }
}

std::size_t TspInstance::valley_count() const {
  if (valley_of_.empty()) return 0;
  return *std::max_element(valley_of_.begin(), valley_of_.end()) + 1;
}

std::vector<std::size_t> TspInstance::valley_cities(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (valley_of_[i] == v) out.push_back(i);
  }
  return out;
}

std::pair<std::size_t, std::size_t> TspInstance::arc_at(std::size_t index) const {
  const std::size_t from = index / (n_ - 1);
  std::size_t to = index % (n_ - 1);
  if (to >= from) ++to;
  return {from, to};
}

Rational tour_cost(const TspInstance& inst, const std::vector<std::size_t>& order) {
  Rational total;
  for (std::size_t i = 0; i < order.size(); ++i) {
    total += inst.cost(order[i], order[(i + 1) % order.size()]);
  }
  return total;
}

bool is_valid_tour(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t c : order) {
    if (c >= n || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

}  // namespace lpgap::tsp

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

#ifndef LPGAP_HULL2D_HPP_
#define LPGAP_HULL2D_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpgap/lp.hpp"
#include "lpgap/rational.hpp"

namespace lpgap::hull {

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Halfplane y <= slope * x + intercept.
struct Facet {
  Rational slope;
  Rational intercept;
};

// Upper boundary of a strictly concave vertex chain. Facet i joins vertices
// i and i+1. The bounding box 0 <= x <= V-1, y >= 0 closes the region.
struct ArcPolytope {
  std::vector<Point2> vertices;
  std::vector<Facet> facets;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t facet_count() const { return facets.size(); }
  Rational x_max() const { return vertices.back().x; }
};

// Vertices (i, i(2V - i)) for i = 0..V-1. Throws ValidationError for V < 2.
ArcPolytope gen_arc(std::size_t vertex_count);

// Maximize `objective` = (cx, cy) over the box plus the listed facets.
lp::LinearProgram facet_program(const ArcPolytope& poly, const std::vector<std::size_t>& facets,
                                 const Rational& cx, const Rational& cy);

struct AdversaryResult {
  std::size_t omitted = 0;
  Rational objective_x;  // -slope of the omitted facet
  Rational objective_y;  // always 1
  Rational true_max;
  lp::LpStatus relaxed_status = lp::LpStatus::kOptimal;
  // Set when the relaxation is bounded.
  std::optional<Rational> relaxed_max;
  std::optional<Point2> witness;
  std::optional<Rational> gap;
  // Raised when the gap is zero or the relaxation is unbounded (V = 2).
  bool flagged = false;
};

// Objective along the outward normal of facet `omitted`, maximized over the
// full polytope and over the model that drops `omitted` (box kept).
AdversaryResult adversarial_objective(const ArcPolytope& poly, std::size_t omitted);

// Same, against an arbitrary kept-facet subset; `probe` must not be kept.
AdversaryResult adversarial_objective(const ArcPolytope& poly, std::size_t probe,
                                      const std::vector<std::size_t>& kept);

struct ScanRow {
  std::size_t subset_id = 0;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> omitted;
  // One entry per probed facet: the omitted ones, or every facet when none
  // is omitted.
  std::vector<AdversaryResult> probes;
  // Index into probes of the largest gap; unbounded dominates.
  std::size_t worst = 0;

  bool shows_gap() const;
};

struct ScanReport {
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  std::size_t budget = 0;
  BigInt subset_space;  // C(facets, budget)
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<ScanRow> rows;  // sorted by omitted-index list

  std::size_t rows_with_gap() const;
};

inline constexpr std::uint64_t kEnumerationThreshold = 10000;

// Keeps `budget` facets per subset. Enumerates every subset when
// C(facets, budget) <= kEnumerationThreshold, otherwise draws `sample_count`
// distinct subsets from a generator seeded with `seed`.
ScanReport subset_gap_scan(const ArcPolytope& poly, std::size_t budget, std::size_t sample_count,
                           std::uint64_t seed);

}  // namespace lpgap::hull

#endif  // LPGAP_HULL2D_HPP_

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

#include "lpgap/hull2d.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "lpgap/error.hpp"

namespace lpgap::hull {

ArcPolytope gen_arc(std::size_t vertex_count) {
  if (vertex_count < 2) {
    throw ValidationError("arc polytope needs at least 2 vertices, got " +
                          std::to_string(vertex_count));
  }
  ArcPolytope poly;
  const long v = static_cast<long>(vertex_count);
  for (long i = 0; i < v; ++i) {
    poly.vertices.push_back({Rational(i), Rational(i * (2 * v - i))});
  }
  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    const Point2& a = poly.vertices[i];
    const Point2& b = poly.vertices[i + 1];
    Rational slope = (b.y - a.y) / (b.x - a.x);
    Rational intercept = a.y - slope * a.x;
    poly.facets.push_back({std::move(slope), std::move(intercept)});
  }
  return poly;
}

lp::LinearProgram facet_program(const ArcPolytope& poly, const std::vector<std::size_t>& facets,
                                 const Rational& cx, const Rational& cy) {
  lp::LinearProgram prog(2, lp::Sense::kMaximize);
  prog.objective = {cx, cy};
  prog.upper[0] = poly.x_max();
  for (std::size_t f : facets) {
    if (f >= poly.facet_count()) {
      throw ValidationError("facet index " + std::to_string(f) + " out of range");
    }
    prog.add_constraint({-poly.facets[f].slope, Rational(1)}, lp::Relation::kLessEqual,
                        poly.facets[f].intercept);
  }
  return prog;
}

namespace {

std::vector<std::size_t> all_facets(const ArcPolytope& poly) {
  std::vector<std::size_t> out(poly.facet_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Rational full_model_max(const ArcPolytope& poly, std::size_t facet) {
  const lp::LpOutcome full =
      lp::solve_lp(facet_program(poly, all_facets(poly), -poly.facets[facet].slope, Rational(1)));
  return full.value;
}

AdversaryResult probe(const ArcPolytope& poly, std::size_t facet,
                      const std::vector<std::size_t>& kept, const Rational& true_max) {
  AdversaryResult r;
  r.omitted = facet;
  r.objective_x = -poly.facets[facet].slope;
  r.objective_y = 1;
  r.true_max = true_max;
  const lp::LpOutcome relaxed = lp::solve_lp(facet_program(poly, kept, r.objective_x, r.objective_y));
  r.relaxed_status = relaxed.status;
  if (relaxed.optimal()) {
    r.relaxed_max = relaxed.value;
    r.witness = Point2{relaxed.point[0], relaxed.point[1]};
    r.gap = relaxed.value - true_max;
    r.flagged = r.gap->is_zero();
  } else {
    r.flagged = true;
  }
  return r;
}

bool dominates(const AdversaryResult& a, const AdversaryResult& b) {
  if (!a.gap) return b.gap.has_value();
  if (!b.gap) return false;
  return *a.gap > *b.gap;
}

ScanRow make_row(const ArcPolytope& poly, std::vector<std::size_t> kept,
                 const std::vector<Rational>& true_max) {
  ScanRow row;
  std::vector<bool> is_kept(poly.facet_count(), false);
  for (std::size_t f : kept) is_kept[f] = true;
  for (std::size_t f = 0; f < poly.facet_count(); ++f) {
    if (!is_kept[f]) row.omitted.push_back(f);
  }
  const std::vector<std::size_t> probes = row.omitted.empty() ? kept : row.omitted;
  for (std::size_t f : probes) {
    row.probes.push_back(probe(poly, f, kept, true_max[f]));
    if (dominates(row.probes.back(), row.probes[row.worst])) row.worst = row.probes.size() - 1;
  }
  row.kept = std::move(kept);
  return row;
}

// Uniform draw in [0, bound) without relying on library distributions, whose
// output is implementation-defined.
std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t span = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= span);
  return r % bound;
}

}  // namespace

AdversaryResult adversarial_objective(const ArcPolytope& poly, std::size_t omitted) {
  if (omitted >= poly.facet_count()) {
    throw ValidationError("omitted facet " + std::to_string(omitted) + " out of range [0, " +
                          std::to_string(poly.facet_count()) + ")");
  }
  std::vector<std::size_t> kept;
  for (std::size_t f = 0; f < poly.facet_count(); ++f) {
    if (f != omitted) kept.push_back(f);
  }
  return probe(poly, omitted, kept, full_model_max(poly, omitted));
}

AdversaryResult adversarial_objective(const ArcPolytope& poly, std::size_t facet,
                                      const std::vector<std::size_t>& kept) {
  if (facet >= poly.facet_count()) {
    throw ValidationError("probe facet " + std::to_string(facet) + " out of range");
  }
  return probe(poly, facet, kept, full_model_max(poly, facet));
}

bool ScanRow::shows_gap() const {
  return std::any_of(probes.begin(), probes.end(), [](const AdversaryResult& r) {
    return !r.gap || r.gap->sign() > 0;
  });
}

std::size_t ScanReport::rows_with_gap() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.shows_gap(); }));
}

ScanReport subset_gap_scan(const ArcPolytope& poly, std::size_t budget, std::size_t sample_count,
                           std::uint64_t seed) {
  const std::size_t facets = poly.facet_count();
  if (budget > facets) {
    throw ValidationError("budget " + std::to_string(budget) + " exceeds facet count " +
                          std::to_string(facets));
  }
  ScanReport report;
  report.vertex_count = poly.vertex_count();
  report.facet_count = facets;
  report.budget = budget;
  report.seed = seed;
  mpz_bin_uiui(report.subset_space.get_mpz_t(), facets, budget);

  std::vector<Rational> true_max(facets);
  for (std::size_t f = 0; f < facets; ++f) true_max[f] = full_model_max(poly, f);

  std::vector<std::vector<std::size_t>> subsets;
  if (report.subset_space <= kEnumerationThreshold) {
    // Lexicographic enumeration of kept-index combinations.
    std::vector<std::size_t> comb(budget);
    for (std::size_t i = 0; i < budget; ++i) comb[i] = i;
    for (;;) {
      subsets.push_back(comb);
      std::size_t i = budget;
      while (i > 0 && comb[i - 1] == facets - budget + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t k = i; k < budget; ++k) comb[k] = comb[k - 1] + 1;
    }
  } else {
    report.sampled = true;
    std::mt19937_64 gen(seed);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> pool(facets);
    const std::size_t target =
        report.subset_space < sample_count ? report.subset_space.get_ui() : sample_count;
    while (seen.size() < target) {
      for (std::size_t i = 0; i < facets; ++i) pool[i] = i;
      // Partial Fisher-Yates: the first `budget` slots become the kept set.
      for (std::size_t i = 0; i < budget; ++i) {
        const std::size_t j = i + draw_below(gen, facets - i);
        std::swap(pool[i], pool[j]);
      }
      std::vector<std::size_t> kept(pool.begin(), pool.begin() + static_cast<long>(budget));
      std::sort(kept.begin(), kept.end());
      seen.insert(std::move(kept));
    }
    subsets.assign(seen.begin(), seen.end());
  }

  for (auto& kept : subsets) report.rows.push_back(make_row(poly, std::move(kept), true_max));
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ScanRow& a, const ScanRow& b) { return a.omitted < b.omitted; });
  for (std::size_t i = 0; i < report.rows.size(); ++i) report.rows[i].subset_id = i;
  return report;
}

}  // namespace lpgap::hull

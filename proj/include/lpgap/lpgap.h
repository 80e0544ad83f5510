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

/* C interface to the lpgap toolkit.
 *
 * Objects are opaque handles created by lpgap_*_create / _load / _generate
 * functions and released by the matching _free. Every fallible call returns
 * an lpgap_status; on failure a message for the calling thread is available
 * from lpgap_last_error() until the next failing call on that thread.
 * Rationals cross the boundary as "p/q" strings; big integers as decimal
 * strings. Reports are versioned JSON documents (see lpgap_report_render).
 */
#ifndef LPGAP_LPGAP_H_
#define LPGAP_LPGAP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(LPGAP_BUILDING_LIBRARY)
#define LPGAP_API __attribute__((visibility("default")))
#else
#define LPGAP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpgap_status {
  LPGAP_OK = 0,
  LPGAP_ERR_INVALID_ARGUMENT = 1,
  LPGAP_ERR_BUDGET_EXHAUSTED = 2,
  LPGAP_ERR_IO = 3,
  LPGAP_ERR_INTERNAL = 4
} lpgap_status;

typedef enum lpgap_format { LPGAP_FORMAT_JSON = 0, LPGAP_FORMAT_CSV = 1 } lpgap_format;

typedef enum lpgap_relaxation_kind {
  LPGAP_RELAX_DEGREE = 0,
  LPGAP_RELAX_DEGREE_CUTS = 1,
  LPGAP_RELAX_CUTTING_PLANE = 2
} lpgap_relaxation_kind;

typedef enum lpgap_via {
  LPGAP_VIA_LP = 1,
  LPGAP_VIA_ILP = 2,
  LPGAP_VIA_BOTH = 3
} lpgap_via;

typedef enum lpgap_witness_kind {
  LPGAP_WITNESS_INTERNAL_CYCLES = 0,
  LPGAP_WITNESS_THREE_CIRCULATION = 1,
  LPGAP_WITNESS_OPTIMAL_TOUR = 2
} lpgap_witness_kind;

/* A list of city subsets, flattened: subset i occupies the sizes[i]
 * entries of `cities` that follow subsets 0..i-1. */
typedef struct lpgap_subsets {
  const size_t* cities;
  const size_t* sizes;
  size_t count;
} lpgap_subsets;

typedef struct lpgap_relaxation {
  lpgap_relaxation_kind kind;
  lpgap_subsets cuts;     /* LPGAP_RELAX_DEGREE_CUTS */
  int all_valley_cuts;    /* nonzero: add one cut per valley as well */
  size_t max_rounds;      /* LPGAP_RELAX_CUTTING_PLANE */
} lpgap_relaxation;

typedef struct lpgap_instance lpgap_instance;
typedef struct lpgap_flow lpgap_flow;
typedef struct lpgap_arc_polytope lpgap_arc_polytope;
typedef struct lpgap_report lpgap_report;

LPGAP_API const char* lpgap_version(void);
LPGAP_API const char* lpgap_status_name(lpgap_status status);
LPGAP_API const char* lpgap_last_error(void);

/* ---- TSP instances ---- */
LPGAP_API lpgap_status lpgap_instance_generate(size_t valleys, size_t cities_per_valley,
                                               const char* intra_cost, const char* crossing_cost,
                                               lpgap_instance** out);
LPGAP_API lpgap_status lpgap_instance_load(const char* path, lpgap_instance** out);
LPGAP_API lpgap_status lpgap_instance_save(const lpgap_instance* inst, const char* path);
LPGAP_API size_t lpgap_instance_city_count(const lpgap_instance* inst);
LPGAP_API size_t lpgap_instance_valley_count(const lpgap_instance* inst);
LPGAP_API void lpgap_instance_free(lpgap_instance* inst);

/* ---- flows ---- */
LPGAP_API lpgap_status lpgap_flow_load(const char* path, lpgap_flow** out);
LPGAP_API lpgap_status lpgap_flow_save(const lpgap_flow* flow, const char* path);
/* skipped/skipped_count: the three valleys for LPGAP_WITNESS_THREE_CIRCULATION. */
LPGAP_API lpgap_status lpgap_flow_witness(const lpgap_instance* inst, lpgap_witness_kind kind,
                                          const size_t* skipped, size_t skipped_count,
                                          lpgap_flow** out);
LPGAP_API size_t lpgap_flow_arc_count(const lpgap_flow* flow);
LPGAP_API void lpgap_flow_free(lpgap_flow* flow);

/* ---- arc polytopes ---- */
LPGAP_API lpgap_status lpgap_arc_create(size_t vertex_count, lpgap_arc_polytope** out);
LPGAP_API size_t lpgap_arc_facet_count(const lpgap_arc_polytope* poly);
LPGAP_API void lpgap_arc_free(lpgap_arc_polytope* poly);

/* ---- report producers ---- */
LPGAP_API lpgap_status lpgap_hull_adversary(const lpgap_arc_polytope* poly, size_t omitted,
                                            lpgap_report** out);
LPGAP_API lpgap_status lpgap_hull_scan(const lpgap_arc_polytope* poly, size_t budget,
                                       size_t sample_count, uint64_t seed, lpgap_report** out);
/* thresholds may be NULL (defaults) or threshold_count "p/q" strings. */
LPGAP_API lpgap_status lpgap_valley_gap(const lpgap_instance* inst,
                                        const lpgap_relaxation* relaxation,
                                        const char* const* thresholds, size_t threshold_count,
                                        lpgap_report** out);
LPGAP_API lpgap_status lpgap_cutting_plane(const lpgap_instance* inst, size_t max_rounds,
                                           lpgap_report** out);
LPGAP_API lpgap_status lpgap_decide(const lpgap_instance* inst, const char* threshold,
                                    lpgap_via via, const lpgap_relaxation* relaxation,
                                    lpgap_report** out);
/* cuts may be NULL; all_valley_cuts adds one cut per valley. */
LPGAP_API lpgap_status lpgap_check_flow(const lpgap_instance* inst, const lpgap_flow* flow,
                                        const lpgap_subsets* cuts, int all_valley_cuts,
                                        lpgap_report** out);
LPGAP_API lpgap_status lpgap_space_single(const char* count, lpgap_report** out);
LPGAP_API lpgap_status lpgap_space_subset(const char* universe, const char* chosen,
                                          lpgap_report** out);
LPGAP_API lpgap_status lpgap_space_growth(size_t n_from, size_t n_to, size_t divisor,
                                          lpgap_report** out);
LPGAP_API lpgap_status lpgap_model_demo(const char* start, const char* end, const char* step,
                                        lpgap_report** out);
/* program_json: an "lpgap.lp" document. */
LPGAP_API lpgap_status lpgap_solve_lp_document(const char* program_json, lpgap_report** out);

/* ---- reports ---- */
/* Replaces the report's "config" object with the given JSON object text. */
LPGAP_API lpgap_status lpgap_report_set_config(lpgap_report* report, const char* config_json);
/* *text stays valid until the next render call on this report or its free. */
LPGAP_API lpgap_status lpgap_report_render(lpgap_report* report, lpgap_format format,
                                           const char** text);
LPGAP_API void lpgap_report_free(lpgap_report* report);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* LPGAP_LPGAP_H_ */

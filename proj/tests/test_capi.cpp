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

// Exercises the shared library through its public C header only.
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "lpgap/lpgap.h"

namespace {

std::string render(lpgap_report* r, lpgap_format f = LPGAP_FORMAT_JSON) {
  const char* text = nullptr;
  REQUIRE(lpgap_report_render(r, f, &text) == LPGAP_OK);
  return text;
}

bool has(const std::string& hay, const char* needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(lpgap_version()) > 0);
  CHECK(std::string(lpgap_status_name(LPGAP_ERR_BUDGET_EXHAUSTED)) == "budget_exhausted");
}

TEST_CASE("hull adversary through the C API") {
  lpgap_arc_polytope* poly = nullptr;
  REQUIRE(lpgap_arc_create(4, &poly) == LPGAP_OK);
  CHECK(lpgap_arc_facet_count(poly) == 3);
  lpgap_report* r = nullptr;
  REQUIRE(lpgap_hull_adversary(poly, 1, &r) == LPGAP_OK);
  const std::string json = render(r);
  CHECK(has(json, "\"gap\": \"1\""));
  CHECK(has(json, "\"3/2\""));
  CHECK(has(json, "\"21/2\""));
  REQUIRE(lpgap_report_set_config(r, R"({"vertices":4,"omit":1})") == LPGAP_OK);
  CHECK(has(render(r), "\"omit\": 1"));
  CHECK(lpgap_report_set_config(r, "[1]") == LPGAP_ERR_INVALID_ARGUMENT);
  lpgap_report_free(r);

  CHECK(lpgap_hull_adversary(poly, 3, &r) == LPGAP_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(lpgap_last_error()) > 0);
  lpgap_arc_free(poly);
  CHECK(lpgap_arc_create(1, &poly) == LPGAP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("valley gap and decisions through the C API") {
  lpgap_instance* inst = nullptr;
  REQUIRE(lpgap_instance_generate(4, 2, "0", "1", &inst) == LPGAP_OK);
  CHECK(lpgap_instance_city_count(inst) == 8);
  CHECK(lpgap_instance_valley_count(inst) == 4);

  lpgap_relaxation relax{};
  relax.kind = LPGAP_RELAX_DEGREE;
  lpgap_report* r = nullptr;
  const char* thresholds[] = {"3"};
  REQUIRE(lpgap_valley_gap(inst, &relax, thresholds, 1, &r) == LPGAP_OK);
  std::string json = render(r);
  CHECK(has(json, "\"lp_value\": \"0\""));
  CHECK(has(json, "\"ilp_value\": \"4\""));
  CHECK(has(json, "\"disagreements\": 1"));
  lpgap_report_free(r);

  relax.kind = LPGAP_RELAX_DEGREE_CUTS;
  relax.all_valley_cuts = 1;
  REQUIRE(lpgap_valley_gap(inst, &relax, nullptr, 0, &r) == LPGAP_OK);
  CHECK(has(render(r), "\"lp_value\": \"4\""));
  lpgap_report_free(r);

  const size_t cities[] = {0, 1, 2, 3};
  const size_t sizes[] = {2, 2};
  relax.all_valley_cuts = 0;
  relax.cuts = {cities, sizes, 2};
  REQUIRE(lpgap_valley_gap(inst, &relax, nullptr, 0, &r) == LPGAP_OK);
  CHECK(has(render(r), "\"lp_value\": \"2\""));
  lpgap_report_free(r);

  REQUIRE(lpgap_cutting_plane(inst, 50, &r) == LPGAP_OK);
  json = render(r);
  CHECK(has(json, "\"trace_complete\": true"));
  CHECK(has(json, "\"lp_value\": \"4\""));
  const std::string csv = render(r, LPGAP_FORMAT_CSV);
  CHECK(has(csv, "# kind=cutting-plane\n"));
  lpgap_report_free(r);

  relax = lpgap_relaxation{};
  REQUIRE(lpgap_decide(inst, "3", LPGAP_VIA_BOTH, &relax, &r) == LPGAP_OK);
  json = render(r);
  CHECK(has(json, "\"agree\": false"));
  lpgap_report_free(r);
  CHECK(lpgap_decide(inst, "x", LPGAP_VIA_LP, &relax, &r) == LPGAP_ERR_INVALID_ARGUMENT);

  lpgap_instance_free(inst);
  CHECK(lpgap_instance_generate(1, 2, "0", "1", &inst) == LPGAP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("oracle budget maps to its own status") {
  lpgap_instance* inst = nullptr;
  REQUIRE(lpgap_instance_generate(11, 2, "0", "1", &inst) == LPGAP_OK);
  lpgap_relaxation relax{};
  lpgap_report* r = nullptr;
  CHECK(lpgap_valley_gap(inst, &relax, nullptr, 0, &r) == LPGAP_ERR_BUDGET_EXHAUSTED);
  lpgap_instance_free(inst);
}

TEST_CASE("flows, witnesses and files through the C API") {
  lpgap_instance* inst = nullptr;
  REQUIRE(lpgap_instance_generate(10, 2, "0", "1", &inst) == LPGAP_OK);
  lpgap_flow* flow = nullptr;
  const size_t skipped[] = {0, 4, 7};
  REQUIRE(lpgap_flow_witness(inst, LPGAP_WITNESS_THREE_CIRCULATION, skipped, 3, &flow) == LPGAP_OK);
  CHECK(lpgap_flow_arc_count(flow) > 0);
  lpgap_report* r = nullptr;
  REQUIRE(lpgap_check_flow(inst, flow, nullptr, 1, &r) == LPGAP_OK);
  std::string json = render(r);
  CHECK(has(json, "\"total_cost\": \"9\""));
  CHECK(has(json, "\"degree_ok\": true"));
  lpgap_report_free(r);

  const auto tmp = std::filesystem::temp_directory_path() / "lpgap_capi_test";
  std::filesystem::create_directories(tmp);
  const std::string dir = tmp.string();
  const std::string ipath = dir + "/inst.json";
  const std::string fpath = dir + "/flow.json";
  REQUIRE(lpgap_instance_save(inst, ipath.c_str()) == LPGAP_OK);
  REQUIRE(lpgap_flow_save(flow, fpath.c_str()) == LPGAP_OK);
  lpgap_instance* inst2 = nullptr;
  lpgap_flow* flow2 = nullptr;
  REQUIRE(lpgap_instance_load(ipath.c_str(), &inst2) == LPGAP_OK);
  REQUIRE(lpgap_flow_load(fpath.c_str(), &flow2) == LPGAP_OK);
  REQUIRE(lpgap_check_flow(inst2, flow2, nullptr, 1, &r) == LPGAP_OK);
  CHECK(render(r) == json);
  lpgap_report_free(r);
  lpgap_flow_free(flow2);
  lpgap_instance_free(inst2);

  CHECK(lpgap_instance_load((dir + "/missing.json").c_str(), &inst2) == LPGAP_ERR_IO);
  lpgap_flow_free(flow);
  CHECK(lpgap_flow_witness(inst, LPGAP_WITNESS_THREE_CIRCULATION, skipped, 2, &flow) ==
        LPGAP_ERR_INVALID_ARGUMENT);
  lpgap_instance_free(inst);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("space bounds, demo and LP documents through the C API") {
  lpgap_report* r = nullptr;
  REQUIRE(lpgap_space_single("3628800", &r) == LPGAP_OK);
  CHECK(has(render(r), "\"min_bits\": 22"));
  lpgap_report_free(r);
  REQUIRE(lpgap_space_subset("16", "8", &r) == LPGAP_OK);
  CHECK(has(render(r), "\"object_count\": \"12870\""));
  lpgap_report_free(r);
  CHECK(lpgap_space_single("0", &r) == LPGAP_ERR_INVALID_ARGUMENT);
  CHECK(lpgap_space_single("ten", &r) == LPGAP_ERR_INVALID_ARGUMENT);
  REQUIRE(lpgap_space_growth(4, 12, 4, &r) == LPGAP_OK);
  CHECK(has(render(r), "\"doubles_each_step\": true"));
  lpgap_report_free(r);

  REQUIRE(lpgap_model_demo("0", "8", "1/2", &r) == LPGAP_OK);
  std::string json = render(r);
  CHECK(has(json, "\"grid_monotone\": false"));
  lpgap_report_free(r);

  const char* prog = R"({"format":"lpgap.lp","version":1,"sense":"maximize","num_vars":1,
    "objective":["1"],"constraints":[{"coeffs":["2"],"relation":"<=","rhs":"3"}],
    "lower":["0"],"upper":[null]})";
  REQUIRE(lpgap_solve_lp_document(prog, &r) == LPGAP_OK);
  json = render(r);
  CHECK(has(json, "\"value\": \"3/2\""));
  lpgap_report_free(r);
  CHECK(lpgap_solve_lp_document("{}", &r) == LPGAP_ERR_INVALID_ARGUMENT);
}

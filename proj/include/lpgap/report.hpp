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

#ifndef LPGAP_REPORT_HPP_
#define LPGAP_REPORT_HPP_

// Shared report document:
//   {"schema": "lpgap.report", "schema_version": 1, "kind": <subcommand>,
//    "config": {...run configuration...}, "result": {...}}
// A result holding a "rows" array of flat objects projects to CSV as a
// table; any other result projects to "key,value" lines over flattened
// paths. Config and schema lines lead the CSV as "# key=value" comments;
// for tables, so do the remaining result fields as "# result.key=value".

#include <string>
#include <string_view>

#include "lpgap/gap.hpp"
#include "lpgap/hull2d.hpp"
#include "lpgap/lp.hpp"
#include "lpgap/serialize.hpp"
#include "lpgap/space.hpp"
#include "lpgap/valleys.hpp"

namespace lpgap::report {

using io::Json;

inline constexpr int kSchemaVersion = 1;

Json make_document(std::string_view kind, Json result);

Json adversary_result(const hull::ArcPolytope& poly, const hull::AdversaryResult& r);
Json scan_result(const hull::ScanReport& scan);
Json gap_result(const gap::GapReport& report);
Json decision_result(const tsp::TspInstance& inst, const Rational& threshold,
                     const gap::Relaxation& relaxation, const gap::Decision* lp,
                     const gap::Decision* ilp);
Json flow_result(const tsp::TspInstance& inst, const tsp::FlowReport& report);
Json storage_result(const space::StorageBound& bound);
Json growth_result(const std::vector<space::GrowthRow>& rows, std::size_t divisor);
Json demo_result(const space::MonotoneDemo& demo);
Json lp_result(const lp::LinearProgram& prog, const lp::LpOutcome& outcome);

// Deterministic: object keys sorted, 2-space indent, trailing newline.
std::string render_json(const Json& document);
std::string render_csv(const Json& document);

}  // namespace lpgap::report

#endif  // LPGAP_REPORT_HPP_

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

#ifndef LPGAP_SERIALIZE_HPP_
#define LPGAP_SERIALIZE_HPP_

// Text formats. Every document is a JSON object with "format" and "version"
// fields; every rational is a "p/q" string ("p" when q = 1).
//
// Instance ("lpgap.tsp-instance"), worked k=4, c=2, eps=0, M=1 example:
//   {"format": "lpgap.tsp-instance", "version": 1, "n": 8,
//    "valley_of": [0,0,1,1,2,2,3,3],
//    "params": {"valleys": 4, "cities_per_valley": 2,
//               "intra_cost": "0", "crossing_cost": "1"},
//    "cost": [["0","0","1","1","1","1","1","1"],
//             ["0","0","1","1","1","1","1","1"],
//             ["1","1","0","0","1","1","1","1"], ... 8 rows]}
// "params" is optional; the diagonal of "cost" is ignored.
//
// Flow ("lpgap.flow"): arcs as [from, to, "weight"] triples, e.g. the
// internal 2-cycles of the same instance:
//   {"format": "lpgap.flow", "version": 1,
//    "arcs": [[0,1,"1"],[1,0,"1"],[2,3,"1"],[3,2,"1"],
//             [4,5,"1"],[5,4,"1"],[6,7,"1"],[7,6,"1"]]}
//
// Linear program ("lpgap.lp"):
//   {"format": "lpgap.lp", "version": 1, "sense": "maximize", "num_vars": 2,
//    "objective": ["-5","1"],
//    "constraints": [{"coeffs": ["-7","1"], "relation": "<=", "rhs": "0"}],
//    "lower": ["0","0"], "upper": ["3", null]}

#include <string>

#include "json.hpp"
#include "lpgap/lp.hpp"
#include "lpgap/rational.hpp"
#include "lpgap/tsp_instance.hpp"
#include "lpgap/valleys.hpp"

namespace lpgap::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Rational& r);
// Accepts a "p/q" string or a JSON integer.
Rational rational_from_json(const Json& j);

Json instance_to_json(const tsp::TspInstance& inst);
tsp::TspInstance instance_from_json(const Json& j);

Json flow_to_json(const tsp::FlowSolution& flow);
tsp::FlowSolution flow_from_json(const Json& j);

Json program_to_json(const lp::LinearProgram& prog);
lp::LinearProgram program_from_json(const Json& j);

// Throws ValidationError on malformed JSON text.
Json parse_document(const std::string& text);

// Throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lpgap::io

#endif  // LPGAP_SERIALIZE_HPP_

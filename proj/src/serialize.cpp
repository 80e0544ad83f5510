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

#include "lpgap/serialize.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "lpgap/error.hpp"

namespace lpgap::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("document is missing field '") + key + "'");
  }
  return j.at(key);
}

void check_header(const Json& j, const char* format) {
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  const Json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format) {
    throw ValidationError(std::string("expected format '") + format + "'");
  }
  const Json& v = field(j, "version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    throw ValidationError("unsupported format version " + v.dump());
  }
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ValidationError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

// nlohmann type errors surface as validation failures.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ValidationError("rational must be a \"p/q\" string, got " + j.dump());
}

Json instance_to_json(const tsp::TspInstance& inst) {
  Json j;
  j["format"] = "lpgap.tsp-instance";
  j["version"] = kFormatVersion;
  j["n"] = inst.size();
  j["valley_of"] = inst.valley_assignment();
  if (const auto& p = inst.params()) {
    j["params"] = {{"valleys", p->valleys},
                   {"cities_per_valley", p->cities_per_valley},
                   {"intra_cost", to_json(p->intra_cost)},
                   {"crossing_cost", to_json(p->crossing_cost)}};
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < inst.size(); ++k) row.push_back(to_json(inst.cost(i, k)));
    rows.push_back(std::move(row));
  }
  j["cost"] = std::move(rows);
  return j;
}

tsp::TspInstance instance_from_json(const Json& j) {
  return guarded([&] {
    check_header(j, "lpgap.tsp-instance");
    const std::size_t n = index_from_json(field(j, "n"), "n");
    std::vector<std::size_t> valley_of;
    for (const Json& v : field(j, "valley_of")) valley_of.push_back(index_from_json(v, "valley"));
    const Json& rows = field(j, "cost");
    if (!rows.is_array() || rows.size() != n) {
      throw ValidationError("cost matrix must have n rows");
    }
    std::vector<Rational> cost;
    cost.reserve(n * n);
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw ValidationError("cost matrix rows must have n entries");
      }
      for (const Json& c : row) cost.push_back(rational_from_json(c));
    }
    std::optional<tsp::ValleyParams> params;
    if (j.contains("params")) {
      const Json& p = j.at("params");
      params = tsp::ValleyParams{index_from_json(field(p, "valleys"), "valleys"),
                                 index_from_json(field(p, "cities_per_valley"), "cities_per_valley"),
                                 rational_from_json(field(p, "intra_cost")),
                                 rational_from_json(field(p, "crossing_cost"))};
    }
    return tsp::TspInstance(n, std::move(valley_of), std::move(cost), std::move(params));
  });
}

Json flow_to_json(const tsp::FlowSolution& flow) {
  Json arcs = Json::array();
  for (const auto& a : flow.arcs) arcs.push_back(Json::array({a.from, a.to, to_json(a.weight)}));
  return {{"format", "lpgap.flow"}, {"version", kFormatVersion}, {"arcs", std::move(arcs)}};
}

tsp::FlowSolution flow_from_json(const Json& j) {
  return guarded([&] {
    check_header(j, "lpgap.flow");
    tsp::FlowSolution flow;
    for (const Json& a : field(j, "arcs")) {
      if (!a.is_array() || a.size() != 3) {
        throw ValidationError("flow arcs must be [from, to, \"weight\"] triples");
      }
      flow.arcs.push_back({index_from_json(a[0], "arc source"), index_from_json(a[1], "arc target"),
                           rational_from_json(a[2])});
    }
    return flow;
  });
}

Json program_to_json(const lp::LinearProgram& prog) {
  Json j;
  j["format"] = "lpgap.lp";
  j["version"] = kFormatVersion;
  j["sense"] = std::string(lp::sense_name(prog.sense));
  j["num_vars"] = prog.num_vars;
  auto vec = [](const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(to_json(r));
    return out;
  };
  j["objective"] = vec(prog.objective);
  Json cons = Json::array();
  for (const auto& c : prog.constraints) {
    cons.push_back({{"coeffs", vec(c.coeffs)},
                    {"relation", std::string(lp::relation_symbol(c.relation))},
                    {"rhs", to_json(c.rhs)}});
  }
  j["constraints"] = std::move(cons);
  j["lower"] = vec(prog.lower);
  Json upper = Json::array();
  for (const auto& u : prog.upper) upper.push_back(u ? to_json(*u) : Json(nullptr));
  j["upper"] = std::move(upper);
  return j;
}

lp::LinearProgram program_from_json(const Json& j) {
  return guarded([&] {
    check_header(j, "lpgap.lp");
    const std::string sense = field(j, "sense").get<std::string>();
    if (sense != "maximize" && sense != "minimize") {
      throw ValidationError("sense must be 'maximize' or 'minimize'");
    }
    lp::LinearProgram prog(index_from_json(field(j, "num_vars"), "num_vars"),
                           sense == "maximize" ? lp::Sense::kMaximize : lp::Sense::kMinimize);
    auto vec = [](const Json& a) {
      std::vector<Rational> out;
      for (const Json& r : a) out.push_back(rational_from_json(r));
      return out;
    };
    prog.objective = vec(field(j, "objective"));
    for (const Json& c : field(j, "constraints")) {
      const std::string rel = field(c, "relation").get<std::string>();
      lp::Relation relation;
      if (rel == "<=") {
        relation = lp::Relation::kLessEqual;
      } else if (rel == ">=") {
        relation = lp::Relation::kGreaterEqual;
      } else if (rel == "=") {
        relation = lp::Relation::kEqual;
      } else {
        throw ValidationError("unknown relation '" + rel + "'");
      }
      prog.add_constraint(vec(field(c, "coeffs")), relation, rational_from_json(field(c, "rhs")));
    }
    if (j.contains("lower")) prog.lower = vec(j.at("lower"));
    if (j.contains("upper")) {
      prog.upper.clear();
      for (const Json& u : j.at("upper")) {
        prog.upper.push_back(u.is_null() ? std::nullopt
                                         : std::optional<Rational>(rational_from_json(u)));
      }
    }
    prog.validate();
    return prog;
  });
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace lpgap::io

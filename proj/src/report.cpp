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

#include "lpgap/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lpgap::report {

namespace {

Json rat(const Rational& r) { return io::to_json(r); }

template <class T>
Json opt_rat(const std::optional<T>& r) {
  return r ? rat(*r) : Json(nullptr);
}

Json rat_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(rat(r));
  return out;
}

Json point_json(const hull::Point2& p) { return {{"x", rat(p.x)}, {"y", rat(p.y)}}; }

Json probe_json(const hull::AdversaryResult& r) {
  return {{"facet", r.omitted},
          {"objective", Json::array({rat(r.objective_x), rat(r.objective_y)})},
          {"true_max", rat(r.true_max)},
          {"relaxed_status", std::string(lp::status_name(r.relaxed_status))},
          {"relaxed_max", opt_rat(r.relaxed_max)},
          {"gap", opt_rat(r.gap)},
          {"witness", r.witness ? point_json(*r.witness) : Json(nullptr)},
          {"flagged", r.flagged}};
}

}  // namespace

Json make_document(std::string_view kind, Json result) {
  return {{"schema", "lpgap.report"},
          {"schema_version", kSchemaVersion},
          {"kind", std::string(kind)},
          {"config", Json::object()},
          {"result", std::move(result)}};
}

Json adversary_result(const hull::ArcPolytope& poly, const hull::AdversaryResult& r) {
  Json out = probe_json(r);
  const hull::Facet& f = poly.facets[r.omitted];
  out["vertex_count"] = poly.vertex_count();
  out["facet_count"] = poly.facet_count();
  out["omitted_facet"] = {{"index", r.omitted}, {"slope", rat(f.slope)}, {"intercept", rat(f.intercept)}};
  // Kept facets plus the x <= V-1 bound; x >= 0 and y >= 0 are variable bounds.
  out["model_constraints"] = poly.facet_count();
  out["witness_violates_omitted"] =
      r.witness ? Json(r.witness->y > f.slope * r.witness->x + f.intercept) : Json(nullptr);
  return out;
}

Json scan_result(const hull::ScanReport& scan) {
  Json rows = Json::array();
  for (const auto& row : scan.rows) {
    const hull::AdversaryResult& worst = row.probes[row.worst];
    Json gaps = Json::array();
    for (const auto& p : row.probes) gaps.push_back(p.gap ? rat(*p.gap) : Json("unbounded"));
    rows.push_back({{"subset_id", row.subset_id},
                    {"omitted", row.omitted},
                    {"kept_count", row.kept.size()},
                    {"objective", Json::array({rat(worst.objective_x), rat(worst.objective_y)})},
                    {"objective_facet", worst.omitted},
                    {"true_max", rat(worst.true_max)},
                    {"relaxed_max", opt_rat(worst.relaxed_max)},
                    {"gap", worst.gap ? rat(*worst.gap) : Json("unbounded")},
                    {"all_gaps", std::move(gaps)},
                    {"shows_gap", row.shows_gap()}});
  }
  return {{"vertex_count", scan.vertex_count},
          {"facet_count", scan.facet_count},
          {"budget", scan.budget},
          {"subset_space", scan.subset_space.get_str()},
          {"sampled", scan.sampled},
          {"seed", scan.seed},
          {"subsets", scan.rows.size()},
          {"subsets_with_gap", scan.rows_with_gap()},
          {"rows", std::move(rows)}};
}

namespace {

Json trace_rows(const tsp::CuttingPlaneTrace& trace) {
  Json rows = Json::array();
  for (const auto& r : trace.rounds) {
    rows.push_back({{"round", r.round},
                    {"lp_value", rat(r.lp_value)},
                    {"constraints", r.constraints},
                    {"integral", r.integral},
                    {"cut", r.cut ? Json(r.cut->subset) : Json(nullptr)},
                    {"cut_value", r.cut ? rat(r.cut->cut_value) : Json(nullptr)},
                    {"separation",
                     r.cut ? Json(r.cut->method == tsp::SeparationResult::Method::kComponents
                                      ? "components"
                                      : "min_cut")
                           : Json(nullptr)}});
  }
  return rows;
}

}  // namespace

Json gap_result(const gap::GapReport& report) {
  Json decisions = Json::array();
  for (const auto& d : report.decision_answers) {
    decisions.push_back({{"threshold", rat(d.threshold)},
                         {"lp_answer", std::string(gap::answer_name(d.lp))},
                         {"ilp_answer", std::string(gap::answer_name(d.ilp))},
                         {"agree", d.agree}});
  }
  Json out = {{"instance", report.instance},
              {"relaxation", report.relaxation},
              {"lp_value", rat(report.lp_value)},
              {"ilp_value", rat(report.ilp_value)},
              {"gap", rat(report.gap)},
              {"gap_ratio", opt_rat(report.gap_ratio)},
              {"constraints_used", report.constraints_used},
              {"variables_used", report.variables_used},
              {"rounds", report.rounds},
              {"optimal_tour", report.tour},
              {"oracle", std::string(ilp::method_name(report.oracle))},
              {"decision_form", gap::kDecisionForm},
              {"disagreements", report.disagreements()},
              {"decision_answers", decisions}};
  if (!report.gap_ratio) out["gap_ratio_flag"] = "infinite: lp_value is 0";
  if (report.trace) {
    out["trace"] = trace_rows(*report.trace);
    out["trace_complete"] = report.trace->complete;
    out["final_integral"] = report.trace->final_integral();
    out["rows"] = out["trace"];
  } else {
    out["rows"] = std::move(decisions);
  }
  return out;
}

Json decision_result(const tsp::TspInstance& inst, const Rational& threshold,
                     const gap::Relaxation& relaxation, const gap::Decision* lp,
                     const gap::Decision* ilp) {
  Json out = {{"instance", gap::describe_instance(inst)},
              {"threshold", rat(threshold)},
              {"decision_form", gap::kDecisionForm}};
  if (lp) {
    out["lp"] = {{"answer", std::string(gap::answer_name(lp->answer))},
                 {"relaxation", relaxation.describe()},
                 {"value", rat(lp->value)}};
  }
  if (ilp) {
    out["ilp"] = {{"answer", std::string(gap::answer_name(ilp->answer))},
                  {"value", rat(ilp->value)}};
  }
  if (lp && ilp) {
    out["agree"] = !(lp->answer == gap::Answer::kYes && ilp->answer == gap::Answer::kNo);
  }
  return out;
}

Json flow_result(const tsp::TspInstance& inst, const tsp::FlowReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.degree_violations) {
    violations.push_back({{"city", v.city}, {"out_flow", rat(v.out_flow)}, {"in_flow", rat(v.in_flow)}});
  }
  Json cuts = Json::array();
  for (const auto& c : report.cuts) {
    cuts.push_back({{"subset", c.subset}, {"value", rat(c.value)}, {"violated", c.violated}});
  }
  return {{"instance", gap::describe_instance(inst)},
          {"degree_ok", report.degree_ok},
          {"degree_violations", std::move(violations)},
          {"violated_cuts", report.violated_cuts()},
          {"total_cost", rat(report.total_cost)},
          {"crossing_cost", rat(report.crossing_cost)},
          {"crossing_weight", rat(report.crossing_weight)},
          {"rows", std::move(cuts)}};
}

Json storage_result(const space::StorageBound& bound) {
  Json out = {{"derivation", std::string(space::derivation_name(bound.derivation))},
              {"object_count", bound.object_count.get_str()},
              {"min_bits", bound.min_bits}};
  if (bound.list_bits) out["list_bits"] = bound.list_bits->get_str();
  return out;
}

Json growth_result(const std::vector<space::GrowthRow>& rows, std::size_t divisor) {
  Json table = Json::array();
  bool doubles = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool step_doubles = i == 0 || rows[i].min_bits >= 2 * rows[i - 1].min_bits;
    doubles = doubles && step_doubles;
    table.push_back({{"n", rows[i].n},
                     {"universe", rows[i].universe.get_str()},
                     {"chosen", rows[i].chosen.get_str()},
                     {"min_bits", rows[i].min_bits},
                     {"at_least_doubles", step_doubles}});
  }
  return {{"divisor", divisor}, {"doubles_each_step", doubles}, {"rows", std::move(table)}};
}

Json demo_result(const space::MonotoneDemo& demo) {
  Json samples = Json::array();
  for (const auto& s : demo.samples) {
    samples.push_back({{"x", rat(s.x)}, {"f_approx", s.approx}, {"exact", s.exact}});
  }
  return {{"function", "sin(2^x*pi) + x"},
          {"grid_monotone", demo.grid_monotone},
          {"witness", demo.witness ? Json::array({rat(demo.witness->first), rat(demo.witness->second)})
                                   : Json(nullptr)},
          {"rows", std::move(samples)}};
}

Json lp_result(const lp::LinearProgram& prog, const lp::LpOutcome& outcome) {
  return {{"status", std::string(lp::status_name(outcome.status))},
          {"sense", std::string(lp::sense_name(prog.sense))},
          {"num_vars", prog.num_vars},
          {"constraints", prog.constraints.size()},
          {"value", outcome.optimal() ? rat(outcome.value) : Json(nullptr)},
          {"point", outcome.optimal() ? rat_list(outcome.point) : Json(nullptr)},
          {"pivots", outcome.pivots}};
}

std::string render_json(const Json& document) { return document.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ';';
      out += v[i].is_object() ? v[i].dump() : scalar_text(v[i]);
    }
    return out;
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      flatten(child, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (v.is_array() && !v.empty() && v[0].is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

}  // namespace

std::string render_csv(const Json& document) {
  std::ostringstream os;
  os << "# schema=" << document.value("schema", "") << "\n";
  os << "# schema_version=" << document.value("schema_version", 0) << "\n";
  os << "# kind=" << document.value("kind", "") << "\n";
  std::vector<std::pair<std::string, std::string>> config;
  if (document.contains("config")) flatten(document.at("config"), "", config);
  for (const auto& [key, value] : config) os << "# config." << key << "=" << value << "\n";

  const Json& result = document.at("result");
  if (result.contains("rows") && result.at("rows").is_array()) {
    // Scalars ride along as comments; a copy of the table is not repeated.
    std::vector<std::pair<std::string, std::string>> scalars;
    for (const auto& [key, value] : result.items()) {
      if (key != "rows" && value != result.at("rows")) flatten(value, key, scalars);
    }
    for (const auto& [key, value] : scalars) os << "# result." << key << "=" << value << "\n";
    std::vector<std::string> columns;
    std::vector<std::vector<std::pair<std::string, std::string>>> cells;
    for (const Json& row : result.at("rows")) {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(row, "", flat);
      for (const auto& [key, value] : flat) {
        if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
      }
      cells.push_back(std::move(flat));
    }
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_field(columns[i]);
    os << "\n";
    for (const auto& flat : cells) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ",";
        for (const auto& [key, value] : flat) {
          if (key == columns[i]) {
            os << csv_field(value);
            break;
          }
        }
      }
      os << "\n";
    }
    return os.str();
  }

  std::vector<std::pair<std::string, std::string>> flat;
  flatten(result, "", flat);
  os << "key,value\n";
  for (const auto& [key, value] : flat) os << csv_field(key) << "," << csv_field(value) << "\n";
  return os.str();
}

}  // namespace lpgap::report

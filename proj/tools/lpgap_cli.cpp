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

// lpgap command line front end. Links only the C API in lpgap/lpgap.h.
//
// Exit status: 0 success, 1 I/O or internal failure, 2 usage error,
// 3 invalid parameters, 4 budget exhausted.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpgap/lpgap.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kInvalid = 3, kBudget = 4 };

int exit_for(lpgap_status s) {
  switch (s) {
    case LPGAP_OK: return kOk;
    case LPGAP_ERR_INVALID_ARGUMENT: return kInvalid;
    case LPGAP_ERR_BUDGET_EXHAUSTED: return kBudget;
    default: return kFailure;
  }
}

// Carries a status out of nested helpers to main.
struct Failure {
  lpgap_status status;
  std::string message;
};

void check(lpgap_status s, const std::string& what) {
  if (s != LPGAP_OK) throw Failure{s, what + ": " + lpgap_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using InstancePtr = std::unique_ptr<lpgap_instance, Deleter<lpgap_instance, lpgap_instance_free>>;
using FlowPtr = std::unique_ptr<lpgap_flow, Deleter<lpgap_flow, lpgap_flow_free>>;
using ReportPtr = std::unique_ptr<lpgap_report, Deleter<lpgap_report, lpgap_report_free>>;
using PolyPtr = std::unique_ptr<lpgap_arc_polytope, Deleter<lpgap_arc_polytope, lpgap_arc_free>>;

struct Options {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;

  // instance
  std::size_t valleys = 10;
  std::size_t cities_per_valley = 2;
  std::string intra_cost = "0";
  std::string crossing_cost = "1";
  std::string instance_path;
  std::string save_instance;

  // hull
  std::size_t vertices = 0;
  std::size_t omit = 0;
  std::size_t budget = 0;
  std::size_t samples = 100;

  // relaxations and decisions
  std::string relaxation = "degree";
  std::vector<std::string> cuts;
  bool valley_cuts = false;
  std::size_t rounds = 50;
  std::vector<std::string> thresholds;
  std::string threshold;
  std::string via = "both";

  // flows
  std::string flow_path;
  std::string witness = "three-circulation";
  std::vector<std::size_t> skip{0, 1, 2};
  std::string save_flow;

  // storage bounds
  std::string mode = "single";
  std::string count = "1";
  std::string universe;
  std::string chosen;
  std::size_t n_from = 4;
  std::size_t n_to = 12;
  std::size_t divisor = 4;

  // model demo
  std::string start = "0";
  std::string end = "8";
  std::string step = "1";
};

std::vector<std::size_t> parse_cut(const std::string& text) {
  std::vector<std::size_t> cities;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      cities.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Failure{LPGAP_ERR_INVALID_ARGUMENT, "cut '" + text + "' must be comma-separated city indices"};
    }
  }
  return cities;
}

// Flattened cut storage that outlives the lpgap_subsets view into it.
struct CutList {
  std::vector<std::size_t> cities;
  std::vector<std::size_t> sizes;
  lpgap_subsets view() const { return {cities.data(), sizes.data(), sizes.size()}; }
};

CutList cut_list(const std::vector<std::string>& cuts) {
  CutList out;
  for (const auto& c : cuts) {
    const auto cities = parse_cut(c);
    out.cities.insert(out.cities.end(), cities.begin(), cities.end());
    out.sizes.push_back(cities.size());
  }
  return out;
}

Json instance_config(const Options& o) {
  if (!o.instance_path.empty()) return {{"instance", o.instance_path}};
  return {{"valleys", o.valleys},
          {"cities_per_valley", o.cities_per_valley},
          {"intra_cost", o.intra_cost},
          {"crossing_cost", o.crossing_cost}};
}

InstancePtr make_instance(const Options& o) {
  lpgap_instance* raw = nullptr;
  if (!o.instance_path.empty()) {
    check(lpgap_instance_load(o.instance_path.c_str(), &raw), "loading instance");
  } else {
    check(lpgap_instance_generate(o.valleys, o.cities_per_valley, o.intra_cost.c_str(),
                                  o.crossing_cost.c_str(), &raw),
          "generating instance");
  }
  InstancePtr inst(raw);
  if (!o.save_instance.empty()) {
    check(lpgap_instance_save(inst.get(), o.save_instance.c_str()), "saving instance");
  }
  return inst;
}

lpgap_relaxation make_relaxation(const Options& o, const CutList& cuts) {
  lpgap_relaxation r{};
  if (o.relaxation == "degree") {
    r.kind = LPGAP_RELAX_DEGREE;
  } else if (o.relaxation == "cuts") {
    r.kind = LPGAP_RELAX_DEGREE_CUTS;
    r.cuts = cuts.view();
    r.all_valley_cuts = o.valley_cuts ? 1 : 0;
  } else {
    r.kind = LPGAP_RELAX_CUTTING_PLANE;
    r.max_rounds = o.rounds;
  }
  return r;
}

Json relaxation_config(const Options& o) {
  Json j = {{"relaxation", o.relaxation}};
  if (o.relaxation == "cuts") {
    j["cuts"] = o.cuts;
    j["valley_cuts"] = o.valley_cuts;
  }
  if (o.relaxation == "cutting-plane") j["rounds"] = o.rounds;
  return j;
}

ReportPtr run(const std::string& cmd, const Options& o, Json& config) {
  lpgap_report* raw = nullptr;
  if (cmd == "hull-adversary") {
    config.update({{"vertices", o.vertices}, {"omit", o.omit}});
    lpgap_arc_polytope* p = nullptr;
    check(lpgap_arc_create(o.vertices, &p), "building arc polytope");
    PolyPtr poly(p);
    check(lpgap_hull_adversary(poly.get(), o.omit, &raw), cmd);
  } else if (cmd == "hull-scan") {
    config.update({{"vertices", o.vertices}, {"budget", o.budget}, {"samples", o.samples}});
    lpgap_arc_polytope* p = nullptr;
    check(lpgap_arc_create(o.vertices, &p), "building arc polytope");
    PolyPtr poly(p);
    check(lpgap_hull_scan(poly.get(), o.budget, o.samples, o.seed, &raw), cmd);
  } else if (cmd == "valley-gap") {
    config.update(instance_config(o));
    config.update(relaxation_config(o));
    config["thresholds"] = o.thresholds;
    const auto inst = make_instance(o);
    const CutList cuts = cut_list(o.cuts);
    const lpgap_relaxation relax = make_relaxation(o, cuts);
    std::vector<const char*> xs;
    for (const auto& t : o.thresholds) xs.push_back(t.c_str());
    check(lpgap_valley_gap(inst.get(), &relax, xs.empty() ? nullptr : xs.data(), xs.size(), &raw), cmd);
  } else if (cmd == "cutting-plane") {
    config.update(instance_config(o));
    config["rounds"] = o.rounds;
    const auto inst = make_instance(o);
    check(lpgap_cutting_plane(inst.get(), o.rounds, &raw), cmd);
  } else if (cmd == "decide") {
    config.update(instance_config(o));
    config.update(relaxation_config(o));
    config.update({{"threshold", o.threshold}, {"via", o.via}});
    const auto inst = make_instance(o);
    const CutList cuts = cut_list(o.cuts);
    const lpgap_relaxation relax = make_relaxation(o, cuts);
    const lpgap_via via = o.via == "lp" ? LPGAP_VIA_LP : o.via == "ilp" ? LPGAP_VIA_ILP : LPGAP_VIA_BOTH;
    check(lpgap_decide(inst.get(), o.threshold.c_str(), via, &relax, &raw), cmd);
  } else if (cmd == "check-flow") {
    config.update(instance_config(o));
    config.update({{"cuts", o.cuts}, {"valley_cuts", o.valley_cuts}});
    if (o.flow_path.empty()) {
      config["witness"] = o.witness;
      if (o.witness == "three-circulation") config["skip"] = o.skip;
    } else {
      config["flow"] = o.flow_path;
    }
    const auto inst = make_instance(o);
    lpgap_flow* f = nullptr;
    if (!o.flow_path.empty()) {
      check(lpgap_flow_load(o.flow_path.c_str(), &f), "loading flow");
    } else {
      const lpgap_witness_kind kind = o.witness == "internal-cycles"     ? LPGAP_WITNESS_INTERNAL_CYCLES
                                      : o.witness == "optimal-tour"      ? LPGAP_WITNESS_OPTIMAL_TOUR
                                                                         : LPGAP_WITNESS_THREE_CIRCULATION;
      check(lpgap_flow_witness(inst.get(), kind, o.skip.data(), o.skip.size(), &f), "building witness");
    }
    FlowPtr flow(f);
    if (!o.save_flow.empty()) check(lpgap_flow_save(flow.get(), o.save_flow.c_str()), "saving flow");
    const CutList cuts = cut_list(o.cuts);
    const lpgap_subsets view = cuts.view();
    check(lpgap_check_flow(inst.get(), flow.get(), &view, o.valley_cuts ? 1 : 0, &raw), cmd);
  } else if (cmd == "space-bounds") {
    config["mode"] = o.mode;
    if (o.mode == "single") {
      config["count"] = o.count;
      check(lpgap_space_single(o.count.c_str(), &raw), cmd);
    } else if (o.mode == "subset") {
      config.update({{"universe", o.universe}, {"chosen", o.chosen}});
      check(lpgap_space_subset(o.universe.c_str(), o.chosen.c_str(), &raw), cmd);
    } else {
      config.update({{"from", o.n_from}, {"to", o.n_to}, {"divisor", o.divisor}});
      check(lpgap_space_growth(o.n_from, o.n_to, o.divisor, &raw), cmd);
    }
  } else {
    config.update({{"start", o.start}, {"end", o.end}, {"step", o.step}});
    check(lpgap_model_demo(o.start.c_str(), o.end.c_str(), o.step.c_str(), &raw), cmd);
  }
  return ReportPtr(raw);
}

void add_instance_options(CLI::App* sub, Options& o) {
  sub->add_option("--valleys", o.valleys, "Valley count k")->capture_default_str();
  sub->add_option("--cities-per-valley", o.cities_per_valley, "Cities per valley c")->capture_default_str();
  sub->add_option("--intra-cost", o.intra_cost, "Cost inside a valley (p/q)")->capture_default_str();
  sub->add_option("--crossing-cost", o.crossing_cost, "Mountain crossing cost (p/q)")->capture_default_str();
  sub->add_option("--instance", o.instance_path, "Load the instance from a file instead");
  sub->add_option("--save-instance", o.save_instance, "Write the instance used to a file");
}

void add_relaxation_options(CLI::App* sub, Options& o, bool cutting_plane) {
  std::vector<std::string> kinds{"degree", "cuts"};
  if (cutting_plane) kinds.push_back("cutting-plane");
  sub->add_option("--relaxation", o.relaxation, "Relaxation")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  sub->add_option("--cut", o.cuts, "Subtour cut as comma-separated cities (repeatable)");
  sub->add_flag("--valley-cuts", o.valley_cuts, "Add one subtour cut per valley");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact LP/ILP relaxation gap demonstrations"};
  app.set_version_flag("--version", std::string(lpgap_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", o.output, "Write the report here instead of stdout");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* adv = app.add_subcommand("hull-adversary", "Adversarial objective for one omitted facet");
  adv->add_option("--vertices", o.vertices, "Arc polytope vertex count V")->required();
  adv->add_option("--omit", o.omit, "Index of the omitted facet")->required();

  auto* scan = app.add_subcommand("hull-scan", "Adversarial gaps over facet subsets of size m");
  scan->add_option("--vertices", o.vertices, "Arc polytope vertex count V")->required();
  scan->add_option("--budget", o.budget, "Facets kept, m")->required();
  scan->add_option("--samples", o.samples, "Subsets sampled when enumeration is too large")
      ->capture_default_str();

  auto* gap = app.add_subcommand("valley-gap", "Integrality gap of a valley instance");
  add_instance_options(gap, o);
  add_relaxation_options(gap, o, true);
  gap->add_option("--rounds", o.rounds, "Cutting-plane round budget")->capture_default_str();
  gap->add_option("--threshold", o.thresholds, "Decision threshold X (repeatable)");

  auto* cp = app.add_subcommand("cutting-plane", "Subtour cutting-plane loop");
  add_instance_options(cp, o);
  cp->add_option("--rounds", o.rounds, "Round budget")->capture_default_str();

  auto* dec = app.add_subcommand("decide", "Is there a tour of cost <= X");
  add_instance_options(dec, o);
  add_relaxation_options(dec, o, false);
  dec->add_option("--threshold", o.threshold, "Threshold X (p/q)")->required();
  dec->add_option("--via", o.via, "Answer via the relaxation, the exact oracle or both")
      ->check(CLI::IsMember({"lp", "ilp", "both"}))
      ->capture_default_str();

  auto* flow = app.add_subcommand("check-flow", "Degree and cut feasibility of a fractional flow");
  add_instance_options(flow, o);
  flow->add_option("--flow", o.flow_path, "Load the flow from a file");
  flow->add_option("--witness", o.witness, "Built-in flow when --flow is not given")
      ->check(CLI::IsMember({"internal-cycles", "three-circulation", "optimal-tour"}))
      ->capture_default_str();
  flow->add_option("--skip", o.skip, "Valleys skipped by the three circulations")
      ->expected(3)
      ->delimiter(',');
  flow->add_option("--cut", o.cuts, "Cut to evaluate as comma-separated cities (repeatable)");
  flow->add_flag("--valley-cuts", o.valley_cuts, "Evaluate one cut per valley");
  flow->add_option("--save-flow", o.save_flow, "Write the flow used to a file");

  auto* space = app.add_subcommand("space-bounds", "Exact storage bounds");
  space->add_option("--mode", o.mode, "single, subset or growth")
      ->check(CLI::IsMember({"single", "subset", "growth"}))
      ->capture_default_str();
  space->add_option("--count", o.count, "Solution count k (single)")->capture_default_str();
  space->add_option("--universe", o.universe, "Universe size N (subset)");
  space->add_option("--chosen", o.chosen, "Subset size m (subset)");
  space->add_option("--from", o.n_from, "First n (growth)")->capture_default_str();
  space->add_option("--to", o.n_to, "Last n (growth)")->capture_default_str();
  space->add_option("--divisor", o.divisor, "m = 2^n / divisor (growth)")->capture_default_str();

  auto* demo = app.add_subcommand("model-demo", "Sample sin(2^x pi) + x on a grid");
  demo->add_option("--start", o.start, "Grid start (p/q)")->capture_default_str();
  demo->add_option("--end", o.end, "Grid end (p/q)")->capture_default_str();
  demo->add_option("--step", o.step, "Grid step (p/q)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "space-bounds" && o.mode == "subset" && (o.universe.empty() || o.chosen.empty())) {
    std::cerr << "space-bounds --mode subset needs --universe and --chosen\n";
    return kUsage;
  }

  try {
    Json config = {{"subcommand", cmd}, {"format", o.format}, {"seed", o.seed}};
    ReportPtr report = run(cmd, o, config);
    check(lpgap_report_set_config(report.get(), config.dump().c_str()), "embedding config");
    const char* text = nullptr;
    check(lpgap_report_render(report.get(), o.format == "csv" ? LPGAP_FORMAT_CSV : LPGAP_FORMAT_JSON, &text),
          "rendering report");
    if (o.output.empty()) {
      std::cout << text;
      std::cout.flush();
      if (!std::cout) throw Failure{LPGAP_ERR_IO, "writing report to stdout failed"};
    } else {
      std::ofstream out(o.output, std::ios::binary);
      out << text;
      out.close();
      if (!out) throw Failure{LPGAP_ERR_IO, "cannot write report to " + o.output};
    }
  } catch (const Failure& f) {
    std::cerr << "lpgap: " << f.message << "\n";
    return exit_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "lpgap: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

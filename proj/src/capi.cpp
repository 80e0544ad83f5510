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

#include "lpgap/lpgap.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpgap/error.hpp"
#include "lpgap/gap.hpp"
#include "lpgap/hull2d.hpp"
#include "lpgap/report.hpp"
#include "lpgap/serialize.hpp"
#include "lpgap/space.hpp"
#include "lpgap/valleys.hpp"

struct lpgap_instance {
  lpgap::tsp::TspInstance value;
};

struct lpgap_flow {
  lpgap::tsp::FlowSolution value;
};

struct lpgap_arc_polytope {
  lpgap::hull::ArcPolytope value;
};

struct lpgap_report {
  lpgap::io::Json document;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

lpgap_status fail(lpgap_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps the core's exception taxonomy onto status codes.
template <class F>
lpgap_status guard(F&& body) {
  try {
    body();
    return LPGAP_OK;
  } catch (const lpgap::ValidationError& e) {
    return fail(LPGAP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const lpgap::BudgetExhausted& e) {
    return fail(LPGAP_ERR_BUDGET_EXHAUSTED, e.what());
  } catch (const lpgap::IoError& e) {
    return fail(LPGAP_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LPGAP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LPGAP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LPGAP_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw lpgap::ValidationError(what);
}

lpgap::Rational parse_rational(const char* text, const char* what) {
  require(text != nullptr, what);
  return lpgap::Rational::parse(text);
}

lpgap::BigInt parse_integer(const char* text, const char* what) {
  const lpgap::Rational r = parse_rational(text, what);
  if (!r.is_integer()) throw lpgap::ValidationError(std::string(what) + " must be an integer");
  return r.num();
}

std::vector<std::vector<std::size_t>> unpack(const lpgap_subsets* s) {
  std::vector<std::vector<std::size_t>> out;
  if (s == nullptr || s->count == 0) return out;
  require(s->cities != nullptr && s->sizes != nullptr, "subset arrays must not be null");
  std::size_t pos = 0;
  for (std::size_t i = 0; i < s->count; ++i) {
    out.emplace_back(s->cities + pos, s->cities + pos + s->sizes[i]);
    pos += s->sizes[i];
  }
  return out;
}

lpgap::gap::Relaxation relaxation_from(const lpgap_relaxation* r, const lpgap::tsp::TspInstance& inst) {
  if (r == nullptr) return lpgap::gap::Relaxation::degree();
  switch (r->kind) {
    case LPGAP_RELAX_DEGREE:
      return lpgap::gap::Relaxation::degree();
    case LPGAP_RELAX_DEGREE_CUTS: {
      auto cuts = unpack(&r->cuts);
      if (r->all_valley_cuts) {
        for (auto& v : lpgap::tsp::valley_subsets(inst)) cuts.push_back(std::move(v));
      }
      return lpgap::gap::Relaxation::with_cuts(std::move(cuts));
    }
    case LPGAP_RELAX_CUTTING_PLANE:
      require(r->max_rounds >= 1, "cutting-plane relaxation needs max_rounds >= 1");
      return lpgap::gap::Relaxation::cutting_plane(r->max_rounds);
  }
  throw lpgap::ValidationError("unknown relaxation kind");
}

void emit(lpgap_report** out, std::string_view kind, lpgap::io::Json result) {
  *out = new lpgap_report{lpgap::report::make_document(kind, std::move(result)), {}};
}

}  // namespace

extern "C" {

const char* lpgap_version(void) { return "0.1.0"; }

const char* lpgap_status_name(lpgap_status status) {
  switch (status) {
    case LPGAP_OK: return "ok";
    case LPGAP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LPGAP_ERR_BUDGET_EXHAUSTED: return "budget_exhausted";
    case LPGAP_ERR_IO: return "io_error";
    case LPGAP_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* lpgap_last_error(void) { return g_last_error.c_str(); }

lpgap_status lpgap_instance_generate(size_t valleys, size_t cities_per_valley, const char* intra_cost,
                                     const char* crossing_cost, lpgap_instance** out) {
  return guard([&] {
    require(out != nullptr, "output handle must not be null");
    auto inst = lpgap::tsp::gen_valley_instance(valleys, cities_per_valley,
                                                parse_rational(intra_cost, "intra cost"),
                                                parse_rational(crossing_cost, "crossing cost"));
    *out = new lpgap_instance{std::move(inst)};
  });
}

lpgap_status lpgap_instance_load(const char* path, lpgap_instance** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "path and output handle must not be null");
    auto doc = lpgap::io::parse_document(lpgap::io::read_file(path));
    *out = new lpgap_instance{lpgap::io::instance_from_json(doc)};
  });
}

lpgap_status lpgap_instance_save(const lpgap_instance* inst, const char* path) {
  return guard([&] {
    require(inst != nullptr && path != nullptr, "instance and path must not be null");
    lpgap::io::write_file(path, lpgap::io::instance_to_json(inst->value).dump(1) + "\n");
  });
}

size_t lpgap_instance_city_count(const lpgap_instance* inst) { return inst ? inst->value.size() : 0; }

size_t lpgap_instance_valley_count(const lpgap_instance* inst) {
  return inst ? inst->value.valley_count() : 0;
}

void lpgap_instance_free(lpgap_instance* inst) { delete inst; }

lpgap_status lpgap_flow_load(const char* path, lpgap_flow** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "path and output handle must not be null");
    auto doc = lpgap::io::parse_document(lpgap::io::read_file(path));
    *out = new lpgap_flow{lpgap::io::flow_from_json(doc)};
  });
}

lpgap_status lpgap_flow_save(const lpgap_flow* flow, const char* path) {
  return guard([&] {
    require(flow != nullptr && path != nullptr, "flow and path must not be null");
    lpgap::io::write_file(path, lpgap::io::flow_to_json(flow->value).dump() + "\n");
  });
}

lpgap_status lpgap_flow_witness(const lpgap_instance* inst, lpgap_witness_kind kind,
                                const size_t* skipped, size_t skipped_count, lpgap_flow** out) {
  return guard([&] {
    require(inst != nullptr && out != nullptr, "instance and output handle must not be null");
    lpgap::tsp::FlowSolution flow;
    switch (kind) {
      case LPGAP_WITNESS_INTERNAL_CYCLES:
        flow = lpgap::tsp::internal_cycles_witness(inst->value);
        break;
      case LPGAP_WITNESS_THREE_CIRCULATION:
        require(skipped != nullptr || skipped_count == 0, "skipped valleys must not be null");
        flow = lpgap::tsp::three_circulation_witness(
            inst->value, std::vector<std::size_t>(skipped, skipped + skipped_count));
        break;
      case LPGAP_WITNESS_OPTIMAL_TOUR:
        flow = lpgap::tsp::tour_flow(lpgap::ilp::tsp_oracle(inst->value).order);
        break;
      default:
        throw lpgap::ValidationError("unknown witness kind");
    }
    *out = new lpgap_flow{std::move(flow)};
  });
}

size_t lpgap_flow_arc_count(const lpgap_flow* flow) { return flow ? flow->value.arcs.size() : 0; }

void lpgap_flow_free(lpgap_flow* flow) { delete flow; }

lpgap_status lpgap_arc_create(size_t vertex_count, lpgap_arc_polytope** out) {
  return guard([&] {
    require(out != nullptr, "output handle must not be null");
    *out = new lpgap_arc_polytope{lpgap::hull::gen_arc(vertex_count)};
  });
}

size_t lpgap_arc_facet_count(const lpgap_arc_polytope* poly) {
  return poly ? poly->value.facet_count() : 0;
}

void lpgap_arc_free(lpgap_arc_polytope* poly) { delete poly; }

lpgap_status lpgap_hull_adversary(const lpgap_arc_polytope* poly, size_t omitted, lpgap_report** out) {
  return guard([&] {
    require(poly != nullptr && out != nullptr, "polytope and output handle must not be null");
    auto result = lpgap::hull::adversarial_objective(poly->value, omitted);
    emit(out, "hull-adversary", lpgap::report::adversary_result(poly->value, result));
  });
}

lpgap_status lpgap_hull_scan(const lpgap_arc_polytope* poly, size_t budget, size_t sample_count,
                             uint64_t seed, lpgap_report** out) {
  return guard([&] {
    require(poly != nullptr && out != nullptr, "polytope and output handle must not be null");
    auto scan = lpgap::hull::subset_gap_scan(poly->value, budget, sample_count, seed);
    emit(out, "hull-scan", lpgap::report::scan_result(scan));
  });
}

lpgap_status lpgap_valley_gap(const lpgap_instance* inst, const lpgap_relaxation* relaxation,
                              const char* const* thresholds, size_t threshold_count,
                              lpgap_report** out) {
  return guard([&] {
    require(inst != nullptr && out != nullptr, "instance and output handle must not be null");
    std::optional<std::vector<lpgap::Rational>> xs;
    if (thresholds != nullptr && threshold_count > 0) {
      xs.emplace();
      for (std::size_t i = 0; i < threshold_count; ++i) {
        xs->push_back(parse_rational(thresholds[i], "threshold"));
      }
    }
    auto report = lpgap::gap::integrality_gap(inst->value, relaxation_from(relaxation, inst->value), xs);
    emit(out, "valley-gap", lpgap::report::gap_result(report));
  });
}

lpgap_status lpgap_cutting_plane(const lpgap_instance* inst, size_t max_rounds, lpgap_report** out) {
  return guard([&] {
    require(inst != nullptr && out != nullptr, "instance and output handle must not be null");
    require(max_rounds >= 1, "cutting-plane loop needs max_rounds >= 1");
    auto report = lpgap::gap::integrality_gap(inst->value,
                                              lpgap::gap::Relaxation::cutting_plane(max_rounds));
    emit(out, "cutting-plane", lpgap::report::gap_result(report));
  });
}

lpgap_status lpgap_decide(const lpgap_instance* inst, const char* threshold, lpgap_via via,
                          const lpgap_relaxation* relaxation, lpgap_report** out) {
  return guard([&] {
    require(inst != nullptr && out != nullptr, "instance and output handle must not be null");
    require(via == LPGAP_VIA_LP || via == LPGAP_VIA_ILP || via == LPGAP_VIA_BOTH, "unknown decision route");
    const lpgap::Rational x = parse_rational(threshold, "threshold");
    const auto relax = relaxation_from(relaxation, inst->value);
    std::optional<lpgap::gap::Decision> lp_answer;
    std::optional<lpgap::gap::Decision> ilp_answer;
    if (via & LPGAP_VIA_ILP) {
      ilp_answer = lpgap::gap::decide_tour_at_most(inst->value, x, lpgap::gap::Via::kIlp);
    }
    if (via & LPGAP_VIA_LP) {
      lp_answer = lpgap::gap::decide_tour_at_most(inst->value, x, lpgap::gap::Via::kLpRelaxation, relax);
    }
    emit(out, "decide",
         lpgap::report::decision_result(inst->value, x, relax, lp_answer ? &*lp_answer : nullptr,
                                        ilp_answer ? &*ilp_answer : nullptr));
  });
}

lpgap_status lpgap_check_flow(const lpgap_instance* inst, const lpgap_flow* flow,
                              const lpgap_subsets* cuts, int all_valley_cuts, lpgap_report** out) {
  return guard([&] {
    require(inst != nullptr && flow != nullptr && out != nullptr,
            "instance, flow and output handle must not be null");
    auto subsets = unpack(cuts);
    if (all_valley_cuts) {
      for (auto& v : lpgap::tsp::valley_subsets(inst->value)) subsets.push_back(std::move(v));
    }
    auto report = lpgap::tsp::check_flow_feasibility(inst->value, flow->value, subsets);
    emit(out, "check-flow", lpgap::report::flow_result(inst->value, report));
  });
}

lpgap_status lpgap_space_single(const char* count, lpgap_report** out) {
  return guard([&] {
    require(out != nullptr, "output handle must not be null");
    auto bound = lpgap::space::min_symbols_single(parse_integer(count, "count"));
    emit(out, "space-bounds", lpgap::report::storage_result(bound));
  });
}

lpgap_status lpgap_space_subset(const char* universe, const char* chosen, lpgap_report** out) {
  return guard([&] {
    require(out != nullptr, "output handle must not be null");
    auto bound = lpgap::space::min_symbols_subset(parse_integer(universe, "universe"),
                                                  parse_integer(chosen, "chosen"));
    emit(out, "space-bounds", lpgap::report::storage_result(bound));
  });
}

lpgap_status lpgap_space_growth(size_t n_from, size_t n_to, size_t divisor, lpgap_report** out) {
  return guard([&] {
    require(out != nullptr, "output handle must not be null");
    auto rows = lpgap::space::subset_growth(n_from, n_to, divisor);
    emit(out, "space-bounds", lpgap::report::growth_result(rows, divisor));
  });
}

lpgap_status lpgap_model_demo(const char* start, const char* end, const char* step, lpgap_report** out) {
  return guard([&] {
    require(out != nullptr, "output handle must not be null");
    auto demo = lpgap::space::monotone_model_demo(parse_rational(start, "start"),
                                                  parse_rational(end, "end"),
                                                  parse_rational(step, "step"));
    emit(out, "model-demo", lpgap::report::demo_result(demo));
  });
}

lpgap_status lpgap_solve_lp_document(const char* program_json, lpgap_report** out) {
  return guard([&] {
    require(program_json != nullptr && out != nullptr, "program and output handle must not be null");
    auto prog = lpgap::io::program_from_json(lpgap::io::parse_document(program_json));
    auto outcome = lpgap::lp::solve_lp(prog);
    emit(out, "solve-lp", lpgap::report::lp_result(prog, outcome));
  });
}

lpgap_status lpgap_report_set_config(lpgap_report* report, const char* config_json) {
  return guard([&] {
    require(report != nullptr && config_json != nullptr, "report and config must not be null");
    auto config = lpgap::io::parse_document(config_json);
    require(config.is_object(), "config must be a JSON object");
    report->document["config"] = std::move(config);
  });
}

lpgap_status lpgap_report_render(lpgap_report* report, lpgap_format format, const char** text) {
  return guard([&] {
    require(report != nullptr && text != nullptr, "report and output must not be null");
    switch (format) {
      case LPGAP_FORMAT_JSON: report->rendered = lpgap::report::render_json(report->document); break;
      case LPGAP_FORMAT_CSV: report->rendered = lpgap::report::render_csv(report->document); break;
      default: throw lpgap::ValidationError("unknown report format");
    }
    *text = report->rendered.c_str();
  });
}

void lpgap_report_free(lpgap_report* report) { delete report; }

}  // extern "C"

#include "listchroma/listchroma.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "listchroma/bnp.hpp"
#include "listchroma/instance_io.hpp"
#include "listchroma/instgen.hpp"
#include "listchroma/oracle.hpp"

struct lc_instance {
  listchroma::RawInstance raw;
};

struct lc_result {
  listchroma::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

lc_error fail(lc_error code, std::string msg) {
  g_last_error = std::move(msg);
  return code;
}

template <class F>
lc_error guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const listchroma::ParseError& e) {
    return fail(LC_ERR_PARSE, e.what());
  } catch (const listchroma::EmptyListError& e) {
    return fail(LC_ERR_EMPTY_LIST, e.what());
  } catch (const listchroma::TooLarge& e) {
    return fail(LC_ERR_TOO_LARGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LC_ERR_INTERNAL, "unknown error");
  }
}

std::vector<std::string> split_header(const char* header) {
  std::vector<std::string> lines;
  if (!header) return lines;
  std::istringstream in(header);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

extern "C" {

const char* lc_version(void) { return "1.0.0"; }
const char* lc_last_error(void) { return g_last_error.c_str(); }
const char* lc_generator_algorithm(void) { return listchroma::kGeneratorAlgorithm; }

void lc_gen_config_default(lc_gen_config* cfg) {
  if (!cfg) return;
  *cfg = lc_gen_config{50, 0.5, 1.0, 0.5, LC_WEIGHTS_UNIT, 1, 1, 1, 0};
}

void lc_solve_options_default(lc_solve_options* opts) {
  if (!opts) return;
  *opts = lc_solve_options{-1.0, 1, 1};
}

lc_error lc_instance_parse(const char* text, lc_instance** out) {
  if (!text || !out) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lc_instance{listchroma::parse_instance_text(text)};
    return LC_OK;
  });
}

lc_error lc_instance_load(const char* path, lc_instance** out) {
  if (!path || !out) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  std::ifstream in(path);
  if (!in) return fail(LC_ERR_IO, std::string("cannot open ") + path);
  return guarded([&] {
    *out = new lc_instance{listchroma::parse_instance(in)};
    return LC_OK;
  });
}

lc_error lc_instance_generate(const lc_gen_config* cfg, lc_instance** out) {
  if (!cfg || !out) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    listchroma::GenConfig gc;
    gc.n = cfg->n;
    gc.p = cfg->p;
    gc.c = cfg->c;
    gc.q = cfg->q;
    gc.weight_mode = cfg->weight_mode == LC_WEIGHTS_UNIFORM ? listchroma::WeightMode::Uniform
                                                            : listchroma::WeightMode::Unit;
    gc.weight_lo = cfg->weight_lo;
    gc.weight_hi = cfg->weight_hi;
    gc.seed = cfg->seed;
    gc.strict = cfg->strict != 0;
    *out = new lc_instance{listchroma::generate_raw(gc)};
    return LC_OK;
  });
}

lc_error lc_instance_save(const lc_instance* inst, const char* path, const char* header) {
  if (!inst || !path) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  std::ofstream out(path);
  if (!out) return fail(LC_ERR_IO, std::string("cannot write ") + path);
  return guarded([&] {
    listchroma::write_instance(out, inst->raw, split_header(header));
    out.flush();
    return out ? LC_OK : fail(LC_ERR_IO, std::string("write failed: ") + path);
  });
}

lc_error lc_instance_write(const lc_instance* inst, const char* header, char* buf, size_t buf_size,
                           size_t* needed) {
  if (!inst) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = listchroma::instance_text(inst->raw, split_header(header));
    if (needed) *needed = text.size() + 1;
    if (buf && buf_size >= text.size() + 1) std::memcpy(buf, text.c_str(), text.size() + 1);
    return LC_OK;
  });
}

void lc_instance_free(lc_instance* inst) { delete inst; }

int lc_instance_num_vertices(const lc_instance* inst) { return inst ? inst->raw.graph.size() : 0; }
int lc_instance_num_edges(const lc_instance* inst) {
  return inst ? static_cast<int>(inst->raw.graph.edge_count()) : 0;
}
int lc_instance_num_colors(const lc_instance* inst) {
  return inst ? static_cast<int>(inst->raw.weights.size()) : 0;
}

lc_error lc_check_coloring(const lc_instance* inst, const int* colors, size_t count, int64_t* weight) {
  if (!inst || (!colors && count > 0)) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    // validated against the raw lists, so a file with an empty list never passes
    listchroma::Instance root{inst->raw.graph, inst->raw.weights, inst->raw.lists, {}};
    for (auto& list : root.lists) std::sort(list.begin(), list.end());
    std::vector<listchroma::ColorId> assignment(colors, colors + count);
    for (auto& j : assignment) j -= 1;
    if (auto err = listchroma::validate_coloring(root, assignment))
      return fail(LC_ERR_INVALID_SOLUTION, *err);
    if (weight) *weight = listchroma::coloring_weight(root, assignment);
    return LC_OK;
  });
}

lc_error lc_oracle_solve(const lc_instance* inst, int cap, int* feasible, int64_t* weight) {
  if (!inst || !feasible) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (inst->raw.graph.size() > cap)
      throw listchroma::TooLarge("oracle is limited to " + std::to_string(cap) + " vertices");
    try {
      const auto res = listchroma::oracle_solve(listchroma::build_instance(inst->raw), cap);
      *feasible = res.feasible() ? 1 : 0;
      if (res.feasible() && weight) *weight = res.optimum();
    } catch (const listchroma::EmptyListError&) {
      *feasible = 0;
    }
    return LC_OK;
  });
}

lc_error lc_solve(const lc_instance* inst, const lc_solve_options* opts, lc_result** out) {
  if (!inst || !out) return fail(LC_ERR_INVALID_ARGUMENT, "null argument");
  lc_solve_options defaults;
  lc_solve_options_default(&defaults);
  if (!opts) opts = &defaults;
  return guarded([&] {
    listchroma::SolveConfig cfg;
    if (opts->time_limit_seconds >= 0.0) cfg.time_limit_seconds = opts->time_limit_seconds;
    cfg.same_first = opts->same_first != 0;
    cfg.use_assignment = opts->use_assignment != 0;
    auto res = std::make_unique<lc_result>();
    try {
      res->report = listchroma::solve(listchroma::build_instance(inst->raw), cfg);
    } catch (const listchroma::EmptyListError&) {
      res->report.status = listchroma::SolveStatus::Infeasible;
    }
    *out = res.release();
    return LC_OK;
  });
}

void lc_result_free(lc_result* res) { delete res; }

lc_solve_status lc_result_status(const lc_result* res) {
  switch (res->report.status) {
    case listchroma::SolveStatus::Optimal: return LC_STATUS_OPTIMAL;
    case listchroma::SolveStatus::Infeasible: return LC_STATUS_INFEASIBLE;
    case listchroma::SolveStatus::TimeLimit: return LC_STATUS_TIME_LIMIT;
  }
  return LC_STATUS_INFEASIBLE;
}

int lc_result_has_coloring(const lc_result* res) { return res && res->report.incumbent ? 1 : 0; }

int64_t lc_result_weight(const lc_result* res) {
  return res && res->report.incumbent ? res->report.incumbent->weight : -1;
}

int lc_result_color(const lc_result* res, int v) {
  if (!res || !res->report.incumbent) return 0;
  const auto& a = res->report.incumbent->assignment;
  if (v < 1 || v > static_cast<int>(a.size())) return 0;
  return a[static_cast<std::size_t>(v - 1)] + 1;
}

uint64_t lc_result_nodes(const lc_result* res) { return res ? res->report.nodes : 0; }
uint64_t lc_result_columns(const lc_result* res) { return res ? res->report.columns_generated : 0; }
uint64_t lc_result_pricing_calls(const lc_result* res) { return res ? res->report.pricing_calls : 0; }
double lc_result_wall_seconds(const lc_result* res) { return res ? res->report.wall_seconds : 0.0; }

}  // extern "C"

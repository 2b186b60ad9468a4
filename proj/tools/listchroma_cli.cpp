// listchroma-cli: generate, solve, check and benchmark list-coloring instances.
//
// Exit codes:
//   0  success (solve: optimal; check: pass)
//   1  input or usage error
//   2  solve: infeasible
//   3  solve: time limit reached
//   4  check: the solution or the oracle comparison failed

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "listchroma/listchroma.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kExitCheckFailed = 4;

struct InstanceDeleter {
  void operator()(lc_instance* p) const { lc_instance_free(p); }
};
struct ResultDeleter {
  void operator()(lc_result* p) const { lc_result_free(p); }
};
using InstancePtr = std::unique_ptr<lc_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<lc_result, ResultDeleter>;

struct CliError {
  std::string message;
};

InstancePtr load(const std::string& path) {
  lc_instance* raw = nullptr;
  if (lc_instance_load(path.c_str(), &raw) != LC_OK) throw CliError{path + ": " + lc_last_error()};
  return InstancePtr(raw);
}

std::string fmt_double(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::string fmt_fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("LISTCHROMA_SEED");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw CliError{std::string("LISTCHROMA_SEED is not an integer: ") + s};
  return v;
}

// `c key=value` comment lines written by `generate`, echoed into solve records.
std::vector<std::pair<std::string, std::string>> instance_comments(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("c ", 0) != 0) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
  }
  return out;
}

struct GenFlags {
  int n = 50;
  double p = 0.5;
  double c = 1.0;
  double q = 0.5;
  std::string weights = "unit";
  std::int64_t weight_lo = 1;
  std::int64_t weight_hi = 10;
  std::optional<std::uint64_t> seed;
  bool strict = false;
};

lc_gen_config to_config(const GenFlags& f, std::uint64_t seed) {
  lc_gen_config cfg;
  lc_gen_config_default(&cfg);
  cfg.n = f.n;
  cfg.p = f.p;
  cfg.c = f.c;
  cfg.q = f.q;
  cfg.weight_mode = f.weights == "uniform" ? LC_WEIGHTS_UNIFORM : LC_WEIGHTS_UNIT;
  cfg.weight_lo = f.weights == "uniform" ? f.weight_lo : 1;
  cfg.weight_hi = f.weights == "uniform" ? f.weight_hi : 1;
  cfg.seed = seed;
  cfg.strict = f.strict ? 1 : 0;
  return cfg;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (auto s = env_seed()) return *s;
  return 1;
}

InstancePtr generate(const lc_gen_config& cfg) {
  lc_instance* raw = nullptr;
  if (lc_instance_generate(&cfg, &raw) != LC_OK) throw CliError{lc_last_error()};
  return InstancePtr(raw);
}

std::string config_header(const lc_gen_config& cfg) {
  std::ostringstream h;
  h << "generator=" << lc_generator_algorithm() << '\n'
    << "n=" << cfg.n << '\n'
    << "p=" << fmt_double(cfg.p) << '\n'
    << "c=" << fmt_double(cfg.c) << '\n'
    << "q=" << fmt_double(cfg.q) << '\n'
    << "weights=" << (cfg.weight_mode == LC_WEIGHTS_UNIFORM ? "uniform" : "unit") << '\n'
    << "weight_lo=" << cfg.weight_lo << '\n'
    << "weight_hi=" << cfg.weight_hi << '\n'
    << "strict=" << cfg.strict << '\n'
    << "seed=" << cfg.seed;
  return h.str();
}

int cmd_generate(const GenFlags& f, const std::string& out) {
  const lc_gen_config cfg = to_config(f, resolve_seed(f.seed));
  auto inst = generate(cfg);
  const std::string header = config_header(cfg);
  if (out.empty() || out == "-") {
    std::size_t needed = 0;
    lc_instance_write(inst.get(), header.c_str(), nullptr, 0, &needed);
    std::string buf(needed, '\0');
    if (lc_instance_write(inst.get(), header.c_str(), buf.data(), buf.size(), &needed) != LC_OK)
      throw CliError{lc_last_error()};
    buf.pop_back();
    std::cout << buf;
  } else if (lc_instance_save(inst.get(), out.c_str(), header.c_str()) != LC_OK) {
    throw CliError{lc_last_error()};
  }
  return kExitOk;
}

struct SolveFlags {
  std::string input;
  double time_limit = -1.0;
  bool differ_first = false;
  bool no_assignment = false;
  std::string format = "both";
  std::string record_out;
};

const char* status_name(lc_solve_status s) {
  switch (s) {
    case LC_STATUS_OPTIMAL: return "optimal";
    case LC_STATUS_INFEASIBLE: return "infeasible";
    case LC_STATUS_TIME_LIMIT: return "time_limit";
  }
  return "unknown";
}

int cmd_solve(const SolveFlags& f) {
  auto inst = load(f.input);
  lc_solve_options opts;
  lc_solve_options_default(&opts);
  opts.time_limit_seconds = f.time_limit;
  opts.same_first = f.differ_first ? 0 : 1;
  opts.use_assignment = f.no_assignment ? 0 : 1;

  lc_result* raw = nullptr;
  if (lc_solve(inst.get(), &opts, &raw) != LC_OK) throw CliError{lc_last_error()};
  ResultPtr res(raw);

  const int n = lc_instance_num_vertices(inst.get());
  const lc_solve_status status = lc_result_status(res.get());
  const bool has = lc_result_has_coloring(res.get()) != 0;
  std::vector<int> colors;
  if (has) {
    for (int v = 1; v <= n; ++v) colors.push_back(lc_result_color(res.get(), v));
    std::int64_t checked = 0;
    if (lc_check_coloring(inst.get(), colors.data(), colors.size(), &checked) != LC_OK ||
        checked != lc_result_weight(res.get()))
      throw CliError{std::string("solver returned an invalid coloring: ") + lc_last_error()};
  }

  std::ostringstream human;
  human << "status:        " << status_name(status) << '\n';
  if (has) human << "weight:        " << lc_result_weight(res.get()) << '\n';
  human << "nodes:         " << lc_result_nodes(res.get()) << '\n'
        << "columns:       " << lc_result_columns(res.get()) << '\n'
        << "pricing calls: " << lc_result_pricing_calls(res.get()) << '\n'
        << "time:          " << fmt_fixed(lc_result_wall_seconds(res.get()), 3) << " s\n";
  if (has) {
    human << "coloring:";
    for (int v = 1; v <= n; ++v) human << ' ' << v << ':' << colors[v - 1];
    human << '\n';
  }

  std::ostringstream rec;
  rec << "status=" << status_name(status) << '\n';
  rec << "optimum=" << (status == LC_STATUS_OPTIMAL ? std::to_string(lc_result_weight(res.get())) : "none")
      << '\n';
  rec << "incumbent=" << (has ? std::to_string(lc_result_weight(res.get())) : "none") << '\n';
  rec << "nodes=" << lc_result_nodes(res.get()) << '\n'
      << "columns=" << lc_result_columns(res.get()) << '\n'
      << "pricing_calls=" << lc_result_pricing_calls(res.get()) << '\n'
      << "wall_time=" << fmt_fixed(lc_result_wall_seconds(res.get()), 6) << '\n'
      << "input=" << f.input << '\n'
      << "config.time_limit=" << (f.time_limit < 0 ? std::string("none") : fmt_double(f.time_limit)) << '\n'
      << "config.same_first=" << opts.same_first << '\n'
      << "config.use_assignment=" << opts.use_assignment << '\n'
      << "vertices=" << n << '\n';
  for (const auto& [k, v] : instance_comments(f.input)) rec << "instance." << k << '=' << v << '\n';
  for (int v = 1; has && v <= n; ++v) rec << "color." << v << '=' << colors[v - 1] << '\n';

  if (f.format == "human" || f.format == "both") std::cout << human.str();
  if (f.format == "both") std::cout << '\n';
  if (f.format == "kv" || f.format == "both") std::cout << rec.str();
  if (!f.record_out.empty()) {
    std::ofstream out(f.record_out);
    if (!(out << rec.str())) throw CliError{"cannot write " + f.record_out};
  }

  switch (status) {
    case LC_STATUS_OPTIMAL: return kExitOk;
    case LC_STATUS_INFEASIBLE: return kExitInfeasible;
    case LC_STATUS_TIME_LIMIT: return kExitTimeLimit;
  }
  return kExitInput;
}

// Reads `color.<v>=<j>` lines; everything else in the file is ignored.
std::map<int, int> read_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{"cannot open " + path};
  std::map<int, int> colors;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.rfind("color.", 0) != 0) continue;
    const auto eq = line.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument("missing '='");
      std::size_t used = 0;
      const int v = std::stoi(line.substr(6, eq - 6), &used);
      if (used != eq - 6) throw std::invalid_argument("vertex");
      const int j = std::stoi(line.substr(eq + 1), &used);
      if (used != line.size() - eq - 1) throw std::invalid_argument("color");
      if (!colors.emplace(v, j).second) throw CliError{path + ":" + std::to_string(lineno) + ": vertex assigned twice"};
    } catch (const std::logic_error&) {
      throw CliError{path + ":" + std::to_string(lineno) + ": malformed line '" + line + "'"};
    }
  }
  return colors;
}

int cmd_check(const std::string& input, const std::string& solution, bool oracle, int oracle_cap,
              double time_limit) {
  auto inst = load(input);
  const int n = lc_instance_num_vertices(inst.get());
  if (solution.empty() && !oracle) throw CliError{"check needs --solution and/or --oracle"};

  if (!solution.empty()) {
    const auto map = read_solution(solution);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (const auto& [v, j] : map) {
      if (v < 1 || v > n) throw CliError{"solution names vertex " + std::to_string(v) + " outside 1.." + std::to_string(n)};
      colors[v - 1] = j;
    }
    std::int64_t weight = 0;
    if (lc_check_coloring(inst.get(), colors.data(), colors.size(), &weight) != LC_OK) {
      std::cout << "FAIL " << lc_last_error() << '\n';
      return kExitCheckFailed;
    }
    std::cout << "PASS weight=" << weight << '\n';
  }

  if (oracle) {
    int feasible = 0;
    std::int64_t best = 0;
    if (lc_oracle_solve(inst.get(), oracle_cap, &feasible, &best) != LC_OK) throw CliError{lc_last_error()};
    lc_solve_options opts;
    lc_solve_options_default(&opts);
    opts.time_limit_seconds = time_limit;
    lc_result* raw = nullptr;
    if (lc_solve(inst.get(), &opts, &raw) != LC_OK) throw CliError{lc_last_error()};
    ResultPtr res(raw);
    const lc_solve_status st = lc_result_status(res.get());
    const std::string oracle_txt = feasible ? std::to_string(best) : "infeasible";
    std::string solver_txt = status_name(st);
    if (st == LC_STATUS_OPTIMAL) solver_txt = std::to_string(lc_result_weight(res.get()));
    const bool match = (st == LC_STATUS_OPTIMAL && feasible && lc_result_weight(res.get()) == best) ||
                       (st == LC_STATUS_INFEASIBLE && !feasible);
    std::cout << (match ? "MATCH" : "MISMATCH") << " solver=" << solver_txt << " oracle=" << oracle_txt << '\n';
    if (!match) return kExitCheckFailed;
  }
  return kExitOk;
}

struct BenchFlags {
  std::vector<int> n{50};
  std::vector<double> p{0.5};
  std::vector<double> c{1.0};
  std::vector<double> q{0.5};
  int instances = 5;
  GenFlags gen;
  double time_limit = 3600.0;
  std::string out;
};

int cmd_bench(const BenchFlags& f) {
  std::ostringstream table;
  table << std::left << std::setw(5) << "n" << std::setw(6) << "p" << std::setw(6) << "c" << std::setw(6) << "q"
        << std::right << std::setw(10) << "nodes" << std::setw(10) << "time" << '\n';
  const std::uint64_t base = resolve_seed(f.gen.seed);

  for (int n : f.n)
    for (double p : f.p)
      for (double c : f.c)
        for (double q : f.q) {
          GenFlags g = f.gen;
          g.n = n;
          g.p = p;
          g.c = c;
          g.q = q;
          double sum_nodes = 0.0, sum_time = 0.0;
          int solved = 0;
          for (int i = 0; i < f.instances; ++i) {
            auto inst = generate(to_config(g, base + static_cast<std::uint64_t>(i)));
            lc_solve_options opts;
            lc_solve_options_default(&opts);
            opts.time_limit_seconds = f.time_limit;
            lc_result* raw = nullptr;
            if (lc_solve(inst.get(), &opts, &raw) != LC_OK) throw CliError{lc_last_error()};
            ResultPtr res(raw);
            if (lc_result_status(res.get()) == LC_STATUS_TIME_LIMIT) continue;
            ++solved;
            sum_nodes += static_cast<double>(lc_result_nodes(res.get()));
            sum_time += lc_result_wall_seconds(res.get());
          }
          std::string nodes_txt = "--", time_txt = "--";
          if (solved > 0) {
            nodes_txt = fmt_fixed(sum_nodes / solved, 0);
            time_txt = fmt_fixed(sum_time / solved, 1);
            if (solved < f.instances) time_txt += " (" + std::to_string(solved) + ")";
          }
          table << std::left << std::setw(5) << n << std::setw(6) << fmt_double(p) << std::setw(6) << fmt_double(c)
                << std::setw(6) << fmt_double(q) << std::right << std::setw(10) << nodes_txt << std::setw(10)
                << time_txt << '\n';
        }

  std::cout << table.str();
  if (!f.out.empty()) {
    std::ofstream out(f.out);
    if (!(out << table.str())) throw CliError{"cannot write " + f.out};
  }
  return kExitOk;
}

void add_gen_flags(CLI::App* cmd, GenFlags& g, bool with_size) {
  if (with_size) {
    cmd->add_option("--n", g.n, "number of vertices")->check(CLI::NonNegativeNumber);
    cmd->add_option("--p", g.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--c", g.c, "colors per vertex, |C| = floor(c n)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--q", g.q, "list membership probability")->check(CLI::Range(0.0, 1.0));
  }
  cmd->add_option("--weights", g.weights, "unit or uniform")->check(CLI::IsMember({"unit", "uniform"}));
  cmd->add_option("--weight-lo", g.weight_lo, "smallest weight in uniform mode");
  cmd->add_option("--weight-hi", g.weight_hi, "largest weight in uniform mode");
  cmd->add_option("--seed", g.seed, "random seed (default: $LISTCHROMA_SEED, else 1)");
  cmd->add_flag("--strict", g.strict, "redraw instances with an empty list instead of repairing them");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum-weight list coloring by branch-and-price"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lc_version()));

  GenFlags gen;
  std::string gen_out;
  auto* g = app.add_subcommand("generate", "draw a random instance");
  add_gen_flags(g, gen, true);
  g->add_option("-o,--out", gen_out, "output file (default: stdout)");

  SolveFlags solve;
  auto* s = app.add_subcommand("solve", "solve an instance to optimality");
  s->add_option("input", solve.input, "instance file")->required();
  s->add_option("--time-limit", solve.time_limit, "seconds (default: none)")->check(CLI::NonNegativeNumber);
  s->add_flag("--differ-first", solve.differ_first, "explore the DIFFER child first");
  s->add_flag("--no-assignment", solve.no_assignment, "use column generation on all-complete nodes too");
  s->add_option("--format", solve.format, "human, kv or both")->check(CLI::IsMember({"human", "kv", "both"}));
  s->add_option("--record", solve.record_out, "also write the key=value record to this file");

  std::string check_input, check_solution;
  bool check_oracle = false;
  int oracle_cap = 14;
  double check_time_limit = -1.0;
  auto* c = app.add_subcommand("check", "validate a solution or compare with the brute-force oracle");
  c->add_option("input", check_input, "instance file")->required();
  c->add_option("--solution", check_solution, "file with color.<v>=<j> lines (e.g. a solve record)");
  c->add_flag("--oracle", check_oracle, "compare the solver optimum with brute force");
  c->add_option("--oracle-cap", oracle_cap, "largest n the oracle accepts")->check(CLI::PositiveNumber);
  c->add_option("--time-limit", check_time_limit, "solver time limit in seconds")->check(CLI::NonNegativeNumber);

  BenchFlags bench;
  auto* b = app.add_subcommand("bench", "solve a grid of random instances and print per-cell averages");
  b->add_option("--n", bench.n, "vertex counts")->delimiter(',')->check(CLI::NonNegativeNumber);
  b->add_option("--p", bench.p, "edge probabilities")->delimiter(',')->check(CLI::Range(0.0, 1.0));
  b->add_option("--c", bench.c, "color ratios")->delimiter(',')->check(CLI::NonNegativeNumber);
  b->add_option("--q", bench.q, "membership probabilities")->delimiter(',')->check(CLI::Range(0.0, 1.0));
  b->add_option("--instances", bench.instances, "instances per cell")->check(CLI::PositiveNumber);
  b->add_option("--time-limit", bench.time_limit, "seconds per instance")->check(CLI::NonNegativeNumber);
  b->add_option("-o,--out", bench.out, "also write the table to this file");
  add_gen_flags(b, bench.gen, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*g) return cmd_generate(gen, gen_out);
    if (*s) return cmd_solve(solve);
    if (*c) return cmd_check(check_input, check_solution, check_oracle, oracle_cap, check_time_limit);
    if (*b) return cmd_bench(bench);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitInput;
  }
  return kExitInput;
}

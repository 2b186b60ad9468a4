#include "doctest.h"

#include <random>

#include "listchroma/master.hpp"
#include "listchroma/simplex.hpp"
#include "support.hpp"

using namespace listchroma;
using lctest::make_instance;

namespace {

Column col(std::vector<VertexId> s, ColorId k, Weight w) { return Column{std::move(s), k, w}; }

lctest::BruteLp brute_of(const MasterProblem& mp) {
  lctest::BruteLp lp;
  const int n = mp.instance().num_vertices();
  for (int v = 0; v < n; ++v) {
    lp.at_least.push_back(true);
    lp.rhs.push_back(1.0);
  }
  std::vector<int> row_of_class(mp.partition().classes.size(), -1);
  for (std::size_t k = 0; k < mp.partition().classes.size(); ++k)
    if (mp.partition().classes[k].bounded) {
      row_of_class[k] = static_cast<int>(lp.rhs.size());
      lp.at_least.push_back(false);
      lp.rhs.push_back(static_cast<double>(mp.partition().classes[k].size()));
    }
  for (const auto& c : mp.columns()) {
    std::vector<int> rows(c.vertices.begin(), c.vertices.end());
    if (!c.dummy()) {
      const int r = row_of_class[mp.partition().class_of[c.class_rep]];
      if (r >= 0) rows.push_back(r);
    }
    lp.cost.push_back(static_cast<double>(c.cost));
    lp.rows.push_back(rows);
  }
  return lp;
}

}  // namespace

TEST_CASE("revised simplex on a small covering LP") {
  // min x0 + x1 + x2, each pair of three rows covered by one column: optimum 1.5
  RevisedSimplex lp;
  for (int r = 0; r < 3; ++r) lp.add_row(RowSense::AtLeast, 1.0);
  std::vector<RevisedSimplex::Var> basis;
  for (int r = 0; r < 3; ++r) basis.push_back(static_cast<RevisedSimplex::Var>(lp.add_column(100.0, {r})));
  lp.set_basis(basis);
  lp.add_column(1.0, {0, 1});
  lp.add_column(1.0, {1, 2});
  lp.add_column(1.0, {0, 2});
  auto sol = lp.solve();
  CHECK(sol.objective == doctest::Approx(1.5));
  CHECK(sol.duals[0] + sol.duals[1] == doctest::Approx(1.0));
  double dual_obj = sol.duals[0] + sol.duals[1] + sol.duals[2];
  CHECK(dual_obj == doctest::Approx(1.5));
}

TEST_CASE("set_basis rejects an infeasible start") {
  RevisedSimplex lp;
  lp.add_row(RowSense::AtLeast, 1.0);
  lp.add_column(1.0, {0});
  CHECK_THROWS(lp.set_basis({RevisedSimplex::slack(0)}));
}

TEST_CASE("dummy initialization") {
  SUBCASE("three vertices, total weight 5") {
    auto inst = make_instance(3, {{0, 1}}, {2, 3}, {{0, 1}, {0}, {1}});
    MasterProblem mp(inst, partition_colors(inst), 1 + inst.total_weight());
    CHECK(mp.columns().size() == 3);
    for (const auto& c : mp.columns()) {
      CHECK(c.dummy());
      CHECK(c.cost == 6);
    }
    CHECK(mp.solve().objective == doctest::Approx(18.0));
  }
  SUBCASE("two vertices, M = 4") {
    auto inst = make_instance(2, {}, {1, 2}, {{0}, {1}});
    MasterProblem mp(inst, partition_colors(inst), 4);
    auto res = mp.solve();
    CHECK(res.objective == doctest::Approx(8.0));
    CHECK(res.duals.pi[0] == doctest::Approx(4.0));
    CHECK(res.duals.pi[1] == doctest::Approx(4.0));
  }
  SUBCASE("one vertex") {
    auto inst = make_instance(1, {}, {4}, {{0}});
    MasterProblem mp(inst, partition_colors(inst), 5);
    CHECK(mp.solve().objective == doctest::Approx(5.0));
  }
}

TEST_CASE("solve_lp hand-checked optima") {
  SUBCASE("one real column covering both vertices") {
    auto inst = make_instance(2, {}, {1}, {{0}, {0}});
    const auto part = partition_colors(inst);
    MasterProblem mp(inst, part, 2);
    mp.add_columns({col({0, 1}, 0, 1)});
    auto res = mp.solve();
    CHECK(res.objective == doctest::Approx(1.0));
    CHECK(res.primal[2] == doctest::Approx(1.0));
    CHECK(lctest::brute_lp_optimum(brute_of(mp)).value() == doctest::Approx(res.objective));
  }
  SUBCASE("triangle with singletons of a class of size 3") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}, {0, 2}}, {2, 2, 2}, lctest::full_lists(3, 3));
    const auto part = partition_colors(inst);
    REQUIRE(part.classes.size() == 1);
    MasterProblem mp(inst, part, 1 + inst.total_weight());
    mp.add_columns({col({0}, 0, 2), col({1}, 0, 2), col({2}, 0, 2)});
    auto res = mp.solve();
    CHECK(res.objective == doctest::Approx(6.0));
    CHECK(lctest::brute_lp_optimum(brute_of(mp)).value() == doctest::Approx(6.0));
  }
}

TEST_CASE("add_columns validation") {
  auto inst = make_instance(3, {{0, 1}}, {1, 1}, {{0, 1}, {0, 1}, {0}});
  const auto part = partition_colors(inst);
  MasterProblem mp(inst, part, 1 + inst.total_weight());
  mp.add_columns({col({0, 2}, 0, 1)});
  CHECK(mp.columns().size() == 4);
  CHECK_THROWS_AS(mp.add_columns({col({0, 2}, 0, 1)}), DuplicateColumn);
  CHECK_THROWS_AS(mp.add_columns({col({1}, 0, 1), col({1}, 0, 1)}), DuplicateColumn);
  CHECK(mp.columns().size() == 4);
  CHECK_THROWS_AS(mp.add_columns({col({0, 1}, 0, 1)}), std::invalid_argument);  // not stable
  CHECK_THROWS_AS(mp.add_columns({col({2}, 0, 7)}), std::invalid_argument);     // wrong cost
  const int k1 = part.class_of[1];
  CHECK_THROWS_AS(mp.add_columns({col({2}, part.classes[k1].rep, 1)}), std::invalid_argument);
  mp.add_columns({col({1}, 0, 1), col({0}, part.classes[k1].rep, 1)});
  CHECK(mp.columns().size() == 6);
}

TEST_CASE("master LP agrees with basis enumeration") {
  std::mt19937_64 rng(19);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Instance inst = generate(lctest::gen_config(n, 0.4, 0.8, 0.6, rng(), trial % 2 == 0));
    const auto part = partition_colors(inst);
    MasterProblem mp(inst, part, 1 + inst.total_weight());

    // random stable subsets of random classes
    std::vector<Column> extra;
    for (int t = 0; t < 8; ++t) {
      const auto& cls = part.classes[rng() % part.classes.size()];
      std::vector<VertexId> s;
      for (VertexId v : cls.vertices)
        if (rng() % 2 && inst.graph.is_stable([&] { auto x = s; x.push_back(v); return x; }()))
          s.push_back(v);
      if (s.empty()) continue;
      Column c{s, cls.rep, cls.weight};
      if (mp.contains(c) || std::any_of(extra.begin(), extra.end(), [&](const Column& e) { return e.key() == c.key(); }))
        continue;
      extra.push_back(c);
    }
    // add in two batches to exercise the warm start
    const std::size_t half = extra.size() / 2;
    mp.add_columns({extra.begin(), extra.begin() + static_cast<std::ptrdiff_t>(half)});
    mp.solve();
    mp.add_columns({extra.begin() + static_cast<std::ptrdiff_t>(half), extra.end()});
    const auto res = mp.solve();

    const auto brute = lctest::brute_lp_optimum(brute_of(mp));
    REQUIRE(brute);
    CHECK(res.objective == doctest::Approx(*brute).epsilon(1e-9));

    // strong duality and dual feasibility over the pool
    double dual_obj = 0.0;
    for (double p : res.duals.pi) dual_obj += p;
    for (std::size_t k = 0; k < part.classes.size(); ++k) {
      if (!part.classes[k].bounded) CHECK(res.duals.gamma[k] == 0.0);
      dual_obj -= part.classes[k].size() * res.duals.gamma[k];
    }
    CHECK(dual_obj == doctest::Approx(res.objective));
    for (const auto& c : mp.columns()) {
      double rc = -static_cast<double>(c.cost);
      for (VertexId v : c.vertices) rc += res.duals.pi[v];
      if (!c.dummy()) rc -= res.duals.gamma[part.class_of[c.class_rep]];
      CHECK(rc <= kEps);
    }
    ++compared;
  }
  CHECK(compared == 60);
}

TEST_CASE("check_integrality") {
  auto inst = make_instance(3, {}, {1}, {{0}, {0}, {0}});
  const auto part = partition_colors(inst);
  MasterProblem mp(inst, part, 4);
  mp.add_columns({col({0, 1}, 0, 1), col({2}, 0, 1), col({0, 2}, 0, 1)});
  LpResult res;
  res.primal = {0, 0, 0, 1, 1, 0};
  CHECK(check_integrality(mp, res) == Integrality::Integral);
  res.primal = {0, 0, 0, 0.5, 0, 0.5};
  CHECK(check_integrality(mp, res) == Integrality::FractionalOnBigSets);
  res.primal = {0, 0, 0, 1, 0.5, 0};
  CHECK(check_integrality(mp, res) == Integrality::SingletonFractionalOnly);
  res.primal = {0, 0, 1, 1, 0, 0};  // an active dummy is not a coloring
  CHECK(check_integrality(mp, res) == Integrality::SingletonFractionalOnly);
}

TEST_CASE("extract_integer_solution") {
  SUBCASE("cheaper singleton wins") {
    auto inst = make_instance(1, {}, {2, 3}, {{0, 1}});
    const auto part = partition_colors(inst);
    MasterProblem mp(inst, part, 6);
    mp.add_columns({col({0}, 0, 2), col({0}, 1, 3)});
    LpResult res;
    res.primal = {0, 0.5, 0.5};
    res.objective = 2.5;
    auto sel = extract_integer_solution(mp, res);
    CHECK(sel.chosen == std::vector<std::size_t>{1});
    CHECK(sel.objective == doctest::Approx(2.0));
  }
  SUBCASE("empty residual") {
    auto inst = make_instance(2, {}, {1}, {{0}, {0}});
    MasterProblem mp(inst, partition_colors(inst), 2);
    mp.add_columns({col({0, 1}, 0, 1), col({0}, 0, 1)});
    LpResult res;
    res.primal = {0, 0, 1, 0.3};
    auto sel = extract_integer_solution(mp, res);
    CHECK(sel.chosen == std::vector<std::size_t>{2});
  }
  SUBCASE("class capacity in the residual") {
    // a, b non-adjacent; color 1 (w=1) and color 2 (w=3) each form a class of
    // size 1 over {a,b}, so at most one singleton per class
    auto inst = make_instance(2, {}, {1, 3}, {{0, 1}, {0, 1}});
    const auto part = partition_colors(inst);
    REQUIRE(part.classes.size() == 2);
    MasterProblem mp(inst, part, 5);
    mp.add_columns({col({0}, 0, 1), col({1}, 0, 1), col({0}, 1, 3), col({1}, 1, 3)});
    LpResult res;
    res.primal = {0, 0, 0.5, 0.5, 0.5, 0.5};
    auto sel = extract_integer_solution(mp, res);
    CHECK(sel.objective == doctest::Approx(4.0));
    CHECK(sel.objective == doctest::Approx(lctest::enumerate_singleton_completion(mp, res.primal).value()));
    std::vector<Column> chosen;
    for (auto i : sel.chosen) chosen.push_back(mp.columns()[i]);
    auto coloring = coloring_from_columns(inst, part, chosen);
    CHECK(coloring[0] != coloring[1]);
  }
}

TEST_CASE("node_lower_bound") {
  LpResult res;
  res.objective = 2.000001;
  CHECK(std::get<Weight>(node_lower_bound(res, 10)) == 2);
  res.objective = 2.5;
  CHECK(std::get<Weight>(node_lower_bound(res, 10)) == 3);
  res.objective = 10.0;
  CHECK(std::holds_alternative<Infeasible>(node_lower_bound(res, 10)));
  res.objective = 9.9999995;
  CHECK(std::holds_alternative<Infeasible>(node_lower_bound(res, 10)));
}

TEST_CASE("coloring_from_columns") {
  SUBCASE("overlap goes to the first column, class members are distinct") {
    auto inst = make_instance(3, {}, {1, 1}, lctest::full_lists(3, 2));
    const auto part = partition_colors(inst);
    REQUIRE(part.classes.size() == 1);
    auto coloring = coloring_from_columns(inst, part, {col({1, 2}, 0, 1), col({0, 1}, 0, 1)});
    CHECK(coloring == std::vector<ColorId>{0, 0, 1});
  }
  SUBCASE("too many columns of one class") {
    auto inst = make_instance(2, {}, {1}, {{0}, {0}});
    const auto part = partition_colors(inst);
    CHECK_THROWS_AS(coloring_from_columns(inst, part, {col({0}, 0, 1), col({1}, 0, 1)}), ReconstructionBug);
  }
  SUBCASE("uncovered vertex") {
    auto inst = make_instance(2, {}, {1}, {{0}, {0}});
    CHECK_THROWS_AS(coloring_from_columns(inst, partition_colors(inst), {col({0}, 0, 1)}), ReconstructionBug);
  }
}

#ifndef LISTCHROMA_MASTER_HPP
#define LISTCHROMA_MASTER_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "listchroma/core.hpp"
#include "listchroma/simplex.hpp"

namespace listchroma {

inline constexpr double kEps = 1e-6;

class DuplicateColumn : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A stable set of G^k priced at w_k, or a dummy singleton priced at M.
struct Column {
  std::vector<VertexId> vertices;  // sorted
  ColorId class_rep = -1;          // -1 for dummies
  Weight cost = 0;

  bool dummy() const { return class_rep < 0; }
  auto key() const { return std::make_pair(class_rep, vertices); }
};

Column make_dummy(VertexId v, Weight big_m);

struct DualSolution {
  std::vector<double> pi;     // per vertex
  std::vector<double> gamma;  // per class index, 0 for unbounded classes
};

struct LpResult {
  double objective = 0.0;
  std::vector<double> primal;  // per pool column
  DualSolution duals;
  std::size_t iterations = 0;
};

/// Restricted master of the set-covering formulation: one cover row per vertex
/// and one capacity row per bounded color class.
class MasterProblem {
 public:
  /// Starts the pool with one dummy column per vertex.
  MasterProblem(const Instance& inst, const ColorPartition& partition, Weight big_m);

  /// Throws DuplicateColumn when a column is already pooled, and
  /// std::invalid_argument when a column is not a stable subset of its V_k.
  void add_columns(const std::vector<Column>& cols);
  bool contains(const Column& col) const { return keys_.count(col.key()) > 0; }

  LpResult solve();

  const std::vector<Column>& columns() const { return columns_; }
  const Instance& instance() const { return inst_; }
  const ColorPartition& partition() const { return partition_; }
  Weight big_m() const { return big_m_; }
  int class_row(int class_index) const { return class_row_[class_index]; }

 private:
  void validate(const Column& col) const;
  std::vector<int> rows_for(const Column& col) const;

  Instance inst_;
  ColorPartition partition_;
  Weight big_m_;
  std::vector<int> class_row_;  // class index -> row, -1 when unbounded
  std::vector<Column> columns_;
  std::set<std::pair<ColorId, std::vector<VertexId>>> keys_;
  RevisedSimplex lp_;
};

enum class Integrality { Integral, FractionalOnBigSets, SingletonFractionalOnly };

Integrality check_integrality(const MasterProblem& mp, const LpResult& res);

struct IntegerSelection {
  std::vector<std::size_t> chosen;  // pool indices at value 1
  double objective = 0.0;
};

/// Integral solution read directly off an integral LP optimum.
IntegerSelection integral_selection(const MasterProblem& mp, const LpResult& res);

/// When only singleton columns are fractional: keep the integral big columns
/// and re-solve the residual singleton LP, whose constraint matrix is totally
/// unimodular, so its basic optimum is integral.
IntegerSelection extract_integer_solution(const MasterProblem& mp, const LpResult& res);

struct Infeasible {};

/// ceil(objective - eps), or Infeasible when a dummy must stay active.
std::variant<Weight, Infeasible> node_lower_bound(const LpResult& res, Weight big_m);

/// Turns chosen columns into a node coloring: each vertex takes the first
/// covering column in (class, vertex set) order, and the columns of a class
/// that end up nonempty receive distinct member colors of that class.
std::vector<ColorId> coloring_from_columns(const Instance& inst, const ColorPartition& partition,
                                           const std::vector<Column>& chosen);

}  // namespace listchroma

#endif  // LISTCHROMA_MASTER_HPP

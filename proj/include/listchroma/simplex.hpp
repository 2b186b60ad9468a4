#ifndef LISTCHROMA_SIMPLEX_HPP
#define LISTCHROMA_SIMPLEX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace listchroma {

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RowSense { AtLeast, AtMost };

/// Primal revised simplex for  min c'x  s.t.  rows (>= or <= rhs), x >= 0,
/// with 0/1 structural columns. Each row carries an implicit slack. The basis
/// inverse is kept dense, which is fine for the few hundred rows a node LP has.
///
/// The caller supplies a primal feasible starting basis; columns may be added
/// between solves and the previous basis is reused. Entering variables are
/// chosen by Dantzig's rule, switching to Bland's rule after a run of
/// degenerate pivots, so results are deterministic for a fixed column order.
class RevisedSimplex {
 public:
  /// Variable ids: a structural column j is j, the slack of row r is slack(r).
  using Var = long;
  static constexpr Var slack(std::size_t row) { return -static_cast<Var>(row) - 1; }

  struct Solution {
    double objective = 0.0;
    std::vector<double> primal;  // structural columns
    std::vector<double> duals;   // one per row, c_B' B^-1
    std::size_t iterations = 0;
  };

  std::size_t add_row(RowSense sense, double rhs);
  /// Rows are given by index; every coefficient is 1.
  std::size_t add_column(double cost, std::vector<int> rows);

  std::size_t num_rows() const { return sense_.size(); }
  std::size_t num_columns() const { return cost_.size(); }

  /// Must be nonsingular and primal feasible; one variable per row.
  void set_basis(std::vector<Var> basis);

  Solution solve();

  static constexpr double kOptTol = 1e-9;
  static constexpr double kPivotTol = 1e-9;
  static constexpr std::size_t kRefactorEvery = 64;
  static constexpr std::size_t kDegenerateRun = 30;
  static constexpr std::size_t kMaxIterations = 200000;

 private:
  using Vec = std::vector<double>;

  void refactor();
  void ftran(Var var, Vec& out) const;
  double slack_sign(std::size_t row) const {
    return sense_[row] == RowSense::AtLeast ? -1.0 : 1.0;
  }
  double cost_of(Var var) const { return var < 0 ? 0.0 : cost_[static_cast<std::size_t>(var)]; }
  // Total order on variables used by Bland's rule.
  std::size_t order_key(Var var) const {
    return var >= 0 ? static_cast<std::size_t>(var)
                    : cost_.size() + static_cast<std::size_t>(-var - 1);
  }

  std::vector<RowSense> sense_;
  Vec rhs_;
  Vec cost_;
  std::vector<std::vector<int>> rows_of_;

  std::vector<Var> basis_;
  std::vector<Vec> binv_;  // row-major m x m
  Vec xb_;
};

}  // namespace listchroma

#endif  // LISTCHROMA_SIMPLEX_HPP

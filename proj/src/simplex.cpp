#include "listchroma/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace listchroma {

std::size_t RevisedSimplex::add_row(RowSense sense, double rhs) {
  if (!basis_.empty()) throw std::logic_error("rows cannot be added after a basis is set");
  sense_.push_back(sense);
  rhs_.push_back(rhs);
  return sense_.size() - 1;
}

std::size_t RevisedSimplex::add_column(double cost, std::vector<int> rows) {
  for (int r : rows)
    if (r < 0 || static_cast<std::size_t>(r) >= sense_.size())
      throw std::out_of_range("column references row " + std::to_string(r));
  cost_.push_back(cost);
  rows_of_.push_back(std::move(rows));
  return cost_.size() - 1;
}

void RevisedSimplex::set_basis(std::vector<Var> basis) {
  if (basis.size() != sense_.size()) throw std::invalid_argument("basis size must equal row count");
  basis_ = std::move(basis);
  refactor();
}

void RevisedSimplex::ftran(Var var, Vec& out) const {
  const std::size_t m = sense_.size();
  out.assign(m, 0.0);
  if (var < 0) {
    const auto r = static_cast<std::size_t>(-var - 1);
    const double s = slack_sign(r);
    for (std::size_t i = 0; i < m; ++i) out[i] = s * binv_[i][r];
    return;
  }
  for (int r : rows_of_[static_cast<std::size_t>(var)])
    for (std::size_t i = 0; i < m; ++i) out[i] += binv_[i][static_cast<std::size_t>(r)];
}

void RevisedSimplex::refactor() {
  const std::size_t m = sense_.size();
  // Gauss-Jordan on [B | I]
  std::vector<Vec> a(m, Vec(m, 0.0));
  binv_.assign(m, Vec(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) binv_[i][i] = 1.0;
  for (std::size_t col = 0; col < m; ++col) {
    const Var var = basis_[col];
    if (var < 0) {
      const auto r = static_cast<std::size_t>(-var - 1);
      a[r][col] = slack_sign(r);
    } else {
      for (int r : rows_of_[static_cast<std::size_t>(var)]) a[static_cast<std::size_t>(r)][col] = 1.0;
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < m; ++i)
      if (std::fabs(a[i][col]) > std::fabs(a[piv][col])) piv = i;
    if (std::fabs(a[piv][col]) < 1e-12) throw NumericalFailure("singular basis");
    std::swap(a[piv], a[col]);
    std::swap(binv_[piv], binv_[col]);
    const double inv = 1.0 / a[col][col];
    for (std::size_t k = 0; k < m; ++k) {
      a[col][k] *= inv;
      binv_[col][k] *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0.0) continue;
      const double f = a[i][col];
      for (std::size_t k = 0; k < m; ++k) {
        a[i][k] -= f * a[col][k];
        binv_[i][k] -= f * binv_[col][k];
      }
    }
  }
  xb_.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m; ++r) sum += binv_[i][r] * rhs_[r];
    if (sum < -1e-7) throw NumericalFailure("starting basis is not primal feasible");
    xb_[i] = sum < 0.0 ? 0.0 : sum;
  }
}

RevisedSimplex::Solution RevisedSimplex::solve() {
  const std::size_t m = sense_.size();
  const std::size_t n = cost_.size();
  if (basis_.size() != m) throw std::logic_error("solve() called without a basis");

  std::vector<char> basic_col(n, 0), basic_slack(m, 0);
  for (Var var : basis_) {
    if (var < 0)
      basic_slack[static_cast<std::size_t>(-var - 1)] = 1;
    else
      basic_col[static_cast<std::size_t>(var)] = 1;
  }

  Vec y(m), alpha(m);
  std::size_t iterations = 0, since_refactor = 0, degenerate_run = 0;
  bool bland = false;

  auto compute_duals = [&] {
    for (std::size_t r = 0; r < m; ++r) {
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) sum += cost_of(basis_[i]) * binv_[i][r];
      y[r] = sum;
    }
  };

  for (;;) {
    compute_duals();

    Var entering = 0;
    bool found = false;
    double best = -kOptTol;
    auto consider = [&](Var var, double d) {
      if (d >= -kOptTol) return;
      if (bland) {
        if (!found || order_key(var) < order_key(entering)) {
          entering = var;
          found = true;
        }
      } else if (d < best) {
        best = d;
        entering = var;
        found = true;
      }
    };
    for (std::size_t j = 0; j < n; ++j) {
      if (basic_col[j]) continue;
      double d = cost_[j];
      for (int r : rows_of_[j]) d -= y[static_cast<std::size_t>(r)];
      consider(static_cast<Var>(j), d);
    }
    for (std::size_t r = 0; r < m; ++r)
      if (!basic_slack[r]) consider(slack(r), -slack_sign(r) * y[r]);
    if (!found) break;

    ftran(entering, alpha);
    std::size_t leave = m;
    double theta = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (alpha[i] <= kPivotTol) continue;
      const double ratio = xb_[i] / alpha[i];
      if (leave == m || ratio < theta - 1e-12) {
        leave = i;
        theta = ratio;
      } else if (ratio <= theta + 1e-12) {
        const bool better = bland ? order_key(basis_[i]) < order_key(basis_[leave])
                                  : alpha[i] > alpha[leave];
        if (better) {
          leave = i;
          theta = std::min(theta, ratio);
        }
      }
    }
    if (leave == m) throw NumericalFailure("LP is unbounded");

    for (std::size_t i = 0; i < m; ++i) {
      xb_[i] -= theta * alpha[i];
      if (xb_[i] < 0.0) xb_[i] = 0.0;
    }
    xb_[leave] = theta;

    const double piv = alpha[leave];
    for (std::size_t k = 0; k < m; ++k) binv_[leave][k] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || alpha[i] == 0.0) continue;
      const double f = alpha[i];
      for (std::size_t k = 0; k < m; ++k) binv_[i][k] -= f * binv_[leave][k];
    }

    const Var leaving = basis_[leave];
    if (leaving < 0)
      basic_slack[static_cast<std::size_t>(-leaving - 1)] = 0;
    else
      basic_col[static_cast<std::size_t>(leaving)] = 0;
    if (entering < 0)
      basic_slack[static_cast<std::size_t>(-entering - 1)] = 1;
    else
      basic_col[static_cast<std::size_t>(entering)] = 1;
    basis_[leave] = entering;

    if (theta < 1e-12) {
      if (++degenerate_run >= kDegenerateRun) bland = true;
    } else {
      degenerate_run = 0;
      bland = false;
    }
    if (++iterations > kMaxIterations) throw NumericalFailure("simplex iteration limit reached");
    if (++since_refactor >= kRefactorEvery) {
      refactor();
      since_refactor = 0;
    }
  }

  Solution sol;
  sol.iterations = iterations;
  sol.duals = y;
  sol.primal.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis_[i] >= 0) sol.primal[static_cast<std::size_t>(basis_[i])] = xb_[i];
  for (std::size_t j = 0; j < n; ++j) sol.objective += cost_[j] * sol.primal[j];
  return sol;
}

}  // namespace listchroma

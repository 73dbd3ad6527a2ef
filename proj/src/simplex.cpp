#include "starfan/simplex.hpp"

#include <cmath>
#include <vector>

namespace starfan {

namespace {

constexpr double kPivotTol = 1e-11;

// Tableau layout: T is (m+1) x (cols+1); row m is the objective (maximize),
// column cols is the rhs. basis[i] is the variable occupying row i.
struct Tableau {
  Eigen::MatrixXd T;
  std::vector<int> basis;
  int cols;

  void pivot(int row, int col) {
    T.row(row) /= T(row, col);
    for (int r = 0; r < T.rows(); ++r) {
      if (r == row) continue;
      const double factor = T(r, col);
      if (factor != 0.0) T.row(r) -= factor * T.row(row);
    }
    basis[row] = col;
  }

  // Returns true on optimal, false on unbounded.
  bool solve(int num_vars) {
    const int m = int(basis.size());
    while (true) {
      int col = -1;  // Bland: lowest eligible index
      for (int j = 0; j < num_vars; ++j)
        if (T(m, j) > kPivotTol) {
          col = j;
          break;
        }
      if (col < 0) return true;
      int row = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        if (T(i, col) <= kPivotTol) continue;
        const double ratio = T(i, cols) / T(i, col);
        if (row < 0 || ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[row])) {
          row = i;
          best_ratio = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult simplex_maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                          const Eigen::VectorXd& c) {
  const int m = int(A.rows());
  const int n = int(A.cols());

  // Columns: n structural, m slack, up to m artificial, then rhs.
  std::vector<int> artificial_rows;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0.0) artificial_rows.push_back(i);
  const int n_art = int(artificial_rows.size());
  const int cols = n + m + n_art;

  Tableau t;
  t.cols = cols;
  t.T = Eigen::MatrixXd::Zero(m + 1, cols + 1);
  t.basis.resize(m);

  int art = 0;
  for (int i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    t.T.block(i, 0, 1, n) = sign * A.row(i);
    t.T(i, n + i) = sign;  // slack
    t.T(i, cols) = sign * b[i];
    if (sign < 0) {
      t.T(i, n + m + art) = 1.0;
      t.basis[i] = n + m + art;
      ++art;
    } else {
      t.basis[i] = n + i;
    }
  }

  LpResult res;

  if (n_art > 0) {
    // Phase 1: maximize -sum(artificials); price out the artificial basis.
    t.T.row(m).setZero();
    for (int k = 0; k < n_art; ++k) t.T(m, n + m + k) = -1.0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= n + m) t.T.row(m) += t.T.row(i);
    if (!t.solve(cols)) return res;  // cannot happen: phase 1 is bounded
    double infeasibility = 0.0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= n + m) infeasibility += t.T(i, cols);
    if (infeasibility > 1e-8) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // Drive any degenerate artificial out of the basis.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < n + m) continue;
      int col = -1;
      for (int j = 0; j < n + m; ++j)
        if (std::abs(t.T(i, j)) > kPivotTol) {
          col = j;
          break;
        }
      if (col >= 0) t.pivot(i, col);
    }
    t.T.row(m).setZero();
  }

  // Phase 2 objective: maximize c.x expressed in the current basis.
  t.T.row(m).setZero();
  t.T.block(m, 0, 1, n) = c.transpose();
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n && std::abs(t.T(m, t.basis[i])) > 0.0)
      t.T.row(m) -= t.T(m, t.basis[i]) * t.T.row(i);
  }

  if (!t.solve(n + m)) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.T(i, cols);
  res.objective = c.dot(res.x);
  res.status = LpStatus::Optimal;
  return res;
}

}  // namespace starfan

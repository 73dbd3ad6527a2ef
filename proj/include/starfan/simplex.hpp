#ifndef STARFAN_SIMPLEX_HPP
#define STARFAN_SIMPLEX_HPP

#include <Eigen/Dense>

namespace starfan {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense two-phase primal simplex for tiny problems:
///   maximize c.x  subject to  A x <= b,  x >= 0.
/// Bland's rule throughout (the chamber LPs are small and degenerate).
LpResult simplex_maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                          const Eigen::VectorXd& c);

}  // namespace starfan

#endif

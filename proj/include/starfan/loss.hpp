#ifndef STARFAN_LOSS_HPP
#define STARFAN_LOSS_HPP

#include <utility>
#include <vector>

#include "starfan/star.hpp"

namespace starfan {

struct LabeledDataset {
  std::vector<Vector> points;
  std::vector<int> labels;  // 0 or 1

  int size() const { return int(points.size()); }
  int dim() const { return points.empty() ? 0 : int(points.front().size()); }
};

/// One row of the data matrix: the nonzero entries of a coefficient
/// vector, at most d of them.
using SparseRow = std::vector<std::pair<int, double>>;

/// The m x n matrix whose i-th row is the coefficient vector of the i-th
/// data point. Stored sparsely; A.dot(i, a) evaluates f_a at point i.
struct DataMatrix {
  std::vector<SparseRow> rows;
  int n = 0;

  int size() const { return int(rows.size()); }
  double dot(int i, const Vector& a) const {
    double f = 0.0;
    for (const auto& [j, v] : rows[i]) f += v * a[j];
    return f;
  }
  Matrix dense() const;
};

struct LossReport {
  int fp = 0;
  int fn = 0;
  int err = 0;
  std::vector<int> per_point;  // predicted labels
};

/// log(1 - e^(-z)) for z > 0, stable near both ends.
double log1mexp(double z);

/// Numerically bit-stable sum independent of evaluation chunking.
double pairwise_sum(const std::vector<double>& terms);

DataMatrix data_matrix(const Fan& fan, const LabeledDataset& data);

LossReport zero_one_loss(const DataMatrix& A, const std::vector<int>& labels,
                         const ParamVector& a);

/// Eq.-(2)-style log-likelihood with exponential CDF link. Throws
/// UndefinedAtZero when a positive-labeled point has f = 0.
double log_likelihood(const DataMatrix& A, const std::vector<int>& labels,
                      const ParamVector& a, double lambda);

Vector log_likelihood_grad(const DataMatrix& A, const std::vector<int>& labels,
                           const ParamVector& a, double lambda);

Matrix log_likelihood_hess(const DataMatrix& A, const std::vector<int>& labels,
                           const ParamVector& a, double lambda);

LossReport translational_zero_one_loss(const Fan& fan, const LabeledDataset& data,
                                       const ParamVector& a, const Vector& t);

double translational_log_likelihood(const Fan& fan, const LabeledDataset& data,
                                    const ParamVector& a, const Vector& t, double lambda);

/// The translational 0/1 loss with (a, t) treated as one parameter point;
/// shared entry point for landscape scans over the joint space.
LossReport joint_loss(const Fan& fan, const LabeledDataset& data, const ParamVector& a,
                      const Vector& t);

}  // namespace starfan

#endif

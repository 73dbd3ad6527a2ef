#include "starfan/loss.hpp"

#include <cmath>

namespace starfan {

double log1mexp(double z) {
  // split at ln 2; z near 0 dominates the landscape near degeneracy
  if (z < M_LN2) return std::log(-std::expm1(-z));
  return std::log1p(-std::exp(-z));
}

double pairwise_sum(const std::vector<double>& terms) {
  if (terms.empty()) return 0.0;
  std::vector<double> level = terms;
  while (level.size() > 1) {
    std::vector<double> next((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2) next[i / 2] = level[i] + level[i + 1];
    if (level.size() % 2) next.back() = level.back();
    level = std::move(next);
  }
  return level[0];
}

Matrix DataMatrix::dense() const {
  Matrix M = Matrix::Zero(size(), n);
  for (int i = 0; i < size(); ++i)
    for (const auto& [j, v] : rows[i]) M(i, j) = v;
  return M;
}

DataMatrix data_matrix(const Fan& fan, const LabeledDataset& data) {
  DataMatrix A;
  A.n = fan.num_rays();
  A.rows.reserve(data.size());
  for (int i = 0; i < data.size(); ++i) {
    try {
      const CoefficientVector cv = fan.coords(data.points[i]);
      SparseRow row;
      for (int j : cv.support) row.emplace_back(j, cv.entries[j]);
      A.rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (e.code() == Errc::NoCone)
        throw Error(Errc::NoCone, "point " + std::to_string(i + 1) + ": " + e.what());
      throw;
    }
  }
  return A;
}

LossReport zero_one_loss(const DataMatrix& A, const std::vector<int>& labels,
                         const ParamVector& a) {
  LossReport report;
  report.per_point.resize(A.size());
  for (int i = 0; i < A.size(); ++i) {
    const int pred = A.dot(i, a.a) <= 1.0 ? 0 : 1;
    report.per_point[i] = pred;
    if (pred == 1 && labels[i] == 0) ++report.fp;
    if (pred == 0 && labels[i] == 1) ++report.fn;
  }
  report.err = report.fp + report.fn;
  return report;
}

double log_likelihood(const DataMatrix& A, const std::vector<int>& labels,
                      const ParamVector& a, double lambda) {
  std::vector<double> terms(A.size());
  for (int i = 0; i < A.size(); ++i) {
    const double f = A.dot(i, a.a);
    if (labels[i] == 1) {
      if (f <= 0.0)
        throw Error(Errc::UndefinedAtZero,
                    "positive-labeled point " + std::to_string(i + 1) + " has f = 0");
      terms[i] = log1mexp(lambda * f);
    } else {
      terms[i] = -lambda * f;
    }
  }
  return pairwise_sum(terms);
}

Vector log_likelihood_grad(const DataMatrix& A, const std::vector<int>& labels,
                           const ParamVector& a, double lambda) {
  Vector g = Vector::Zero(A.n);
  for (int i = 0; i < A.size(); ++i) {
    const double f = A.dot(i, a.a);
    double w;
    if (labels[i] == 1) {
      if (f <= 0.0)
        throw Error(Errc::UndefinedAtZero,
                    "positive-labeled point " + std::to_string(i + 1) + " has f = 0");
      const double e = std::exp(-lambda * f);
      w = lambda * e / (1.0 - e);
    } else {
      w = -lambda;
    }
    for (const auto& [j, v] : A.rows[i]) g[j] += w * v;
  }
  return g;
}

Matrix log_likelihood_hess(const DataMatrix& A, const std::vector<int>& labels,
                           const ParamVector& a, double lambda) {
  Matrix H = Matrix::Zero(A.n, A.n);
  for (int i = 0; i < A.size(); ++i) {
    if (labels[i] != 1) continue;  // negative rows are linear in a
    const double f = A.dot(i, a.a);
    if (f <= 0.0)
      throw Error(Errc::UndefinedAtZero,
                  "positive-labeled point " + std::to_string(i + 1) + " has f = 0");
    const double e = std::exp(-lambda * f);
    const double w = -lambda * lambda * e / ((1.0 - e) * (1.0 - e));
    for (const auto& [j, vj] : A.rows[i])
      for (const auto& [k, vk] : A.rows[i]) H(j, k) += w * vj * vk;
  }
  return H;
}

namespace {

LabeledDataset shifted(const LabeledDataset& data, const Vector& t) {
  LabeledDataset out;
  out.labels = data.labels;
  out.points.reserve(data.points.size());
  for (const auto& x : data.points) out.points.push_back(x - t);
  return out;
}

}  // namespace

LossReport translational_zero_one_loss(const Fan& fan, const LabeledDataset& data,
                                       const ParamVector& a, const Vector& t) {
  const LabeledDataset moved = shifted(data, t);
  return zero_one_loss(data_matrix(fan, moved), moved.labels, a);
}

double translational_log_likelihood(const Fan& fan, const LabeledDataset& data,
                                    const ParamVector& a, const Vector& t, double lambda) {
  const LabeledDataset moved = shifted(data, t);
  return log_likelihood(data_matrix(fan, moved), moved.labels, a, lambda);
}

LossReport joint_loss(const Fan& fan, const LabeledDataset& data, const ParamVector& a,
                      const Vector& t) {
  return translational_zero_one_loss(fan, data, a, t);
}

}  // namespace starfan

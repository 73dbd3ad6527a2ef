#include "starfan/optim.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace starfan {

const char* fit_status_name(FitStatus s) {
  switch (s) {
    case FitStatus::Converged: return "Converged";
    case FitStatus::MaxIterations: return "MaxIterations";
    case FitStatus::Degenerate: return "Degenerate";
    case FitStatus::NonfiniteMaximum: return "NonfiniteMaximum";
    case FitStatus::NoPositiveMass: return "NoPositiveMass";
  }
  return "Unknown";
}

namespace {

// Column mass of the positive- and negative-labeled rows.
void column_masses(const DataMatrix& A, const std::vector<int>& labels, Vector& pos,
                   Vector& neg) {
  pos = Vector::Zero(A.n);
  neg = Vector::Zero(A.n);
  for (int i = 0; i < A.size(); ++i)
    for (const auto& [j, v] : A.rows[i]) (labels[i] == 1 ? pos : neg)[j] += v;
}

}  // namespace

FitResult fit_mle(const DataMatrix& A, const std::vector<int>& labels, double lambda,
                  const FitOptions& opts, const Vector& warm_start) {
  const int n = A.n;
  FitResult res;

  // A positive-labeled all-zero row makes the model infeasible everywhere.
  for (int i = 0; i < A.size(); ++i)
    if (labels[i] == 1 && A.rows[i].empty())
      throw Error(Errc::UndefinedAtZero,
                  "positive-labeled point " + std::to_string(i + 1) + " is at the star center");

  Vector pos_mass, neg_mass;
  column_masses(A, labels, pos_mass, neg_mass);

  // No positive support on coordinate j: the gradient component is
  // -lambda * neg_mass_j <= 0 for every a, so a_j is provably driven to
  // the floor. Pinned up front and excluded from the Newton system.
  std::vector<bool> pinned(n, false);
  bool any_positive_row = false;
  for (int i = 0; i < A.size(); ++i)
    if (labels[i] == 1) any_positive_row = true;
  for (int j = 0; j < n; ++j)
    if (pos_mass[j] <= 0.0) {
      pinned[j] = true;
      res.no_positive_mass.push_back(j);
    }

  Vector a = warm_start.size() == n ? warm_start : Vector::Ones(n);
  for (int j = 0; j < n; ++j) {
    a[j] = std::max(a[j], opts.floor);
    if (pinned[j]) a[j] = opts.floor;
  }

  if (!any_positive_row) {
    res.a_star = ParamVector(a);
    res.objective = log_likelihood(A, labels, res.a_star, lambda);
    res.grad_norm = 0.0;
    for (int j = 0; j < n; ++j) res.degenerate_rays.push_back(j);
    res.status = FitStatus::NoPositiveMass;
    return res;
  }

  // Coordinates with positive mass but no negative mass have a strictly
  // positive gradient component for every a: the supremum is only
  // approached at infinity.
  bool structurally_unbounded = false;
  for (int j = 0; j < n; ++j)
    if (pos_mass[j] > 0.0 && neg_mass[j] <= 0.0) structurally_unbounded = true;

  double L = log_likelihood(A, labels, ParamVector(a), lambda);
  Vector prev_a, prev_g;
  double bb_alpha = 1.0;

  auto finish = [&](FitStatus status, int iters, double gnorm) {
    res.a_star = ParamVector(a);
    res.objective = L;
    res.iterations = iters;
    res.grad_norm = gnorm;
    for (int j = 0; j < n; ++j)
      if (a[j] <= opts.floor * (1.0 + 1e-6)) res.degenerate_rays.push_back(j);
    if (status == FitStatus::Converged && structurally_unbounded)
      status = FitStatus::NonfiniteMaximum;
    if (status == FitStatus::Converged && !res.degenerate_rays.empty())
      status = FitStatus::Degenerate;
    res.status = status;
    return res;
  };

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    Vector g = log_likelihood_grad(A, labels, ParamVector(a), lambda);

    // A coordinate resting on the floor with inward-pointing gradient may
    // re-enter; provably degenerate ones never do.
    std::vector<int> free;
    for (int j = 0; j < n; ++j) {
      const bool at_floor = a[j] <= opts.floor * (1.0 + 1e-6);
      if (pinned[j]) continue;
      if (at_floor && g[j] <= 0.0) continue;
      free.push_back(j);
    }

    double gnorm = 0.0;
    for (int j : free) gnorm = std::max(gnorm, std::abs(g[j]));
    if (free.empty() || gnorm <= opts.tol) return finish(FitStatus::Converged, iter - 1, gnorm);

    // Newton direction on the free coordinates; Barzilai-Borwein gradient
    // step when the (negative semidefinite) Hessian is rank deficient.
    // Floor-bound coordinates whose Newton component points outward are
    // dropped from the system and the direction recomputed (active set),
    // otherwise the feasible step length collapses to zero.
    const Matrix H = log_likelihood_hess(A, labels, ParamVector(a), lambda);
    std::vector<int> newton_free = free;
    Vector delta;
    double alpha0 = 1.0;
    bool newton_ok = false;
    while (!newton_free.empty()) {
      const int nn = int(newton_free.size());
      Vector gn(nn);
      Matrix Hn(nn, nn);
      for (int r = 0; r < nn; ++r) {
        gn[r] = g[newton_free[r]];
        for (int c = 0; c < nn; ++c) Hn(r, c) = H(newton_free[r], newton_free[c]);
      }
      Eigen::LDLT<Matrix> ldlt(-Hn);
      if (ldlt.info() != Eigen::Success) break;
      const Vector step = ldlt.solve(gn);
      if (!step.allFinite() || gn.dot(step) <= 0.0 ||
          (Hn * step + gn).norm() > 1e-6 * std::max(1.0, gn.norm()))
        break;
      std::vector<int> keep;
      for (int k = 0; k < nn; ++k) {
        const bool at_floor = a[newton_free[k]] <= opts.floor * (1.0 + 1e-6);
        if (!(at_floor && step[k] < 0.0)) keep.push_back(newton_free[k]);
      }
      if (int(keep.size()) == nn) {
        free = newton_free;
        delta = step;
        newton_ok = true;
        break;
      }
      newton_free = std::move(keep);
    }
    const int nf = int(free.size());
    Vector gf(nf);
    for (int k = 0; k < nf; ++k) gf[k] = g[free[k]];
    if (!newton_ok) {
      if (prev_a.size() == n) {
        Vector s(nf), y(nf);
        for (int k = 0; k < nf; ++k) {
          s[k] = a[free[k]] - prev_a[free[k]];
          y[k] = prev_g[free[k]] - g[free[k]];
        }
        const double sy = s.dot(y);
        if (sy > 1e-300) bb_alpha = std::clamp(s.dot(s) / sy, 1e-12, 1e12);
      }
      delta = gf;
      alpha0 = bb_alpha;
    }

    // Cap the step so a stays at or above the floor.
    double alpha_max = std::numeric_limits<double>::infinity();
    for (int k = 0; k < nf; ++k)
      if (delta[k] < 0.0) alpha_max = std::min(alpha_max, (a[free[k]] - opts.floor) / -delta[k]);
    double alpha = std::min(alpha0, alpha_max);

    const double slope = gf.dot(delta);
    double L_new = L;
    Vector a_new = a;
    bool accepted = false;
    // the backtracking cutoff must scale with the direction: near the floor
    // the gradient can reach ~1/floor and the accepted step is ~floor/|g|
    const double alpha_min = 1e-18 / std::max(1.0, delta.lpNorm<Eigen::Infinity>());
    while (alpha > alpha_min) {
      a_new = a;
      for (int k = 0; k < nf; ++k) {
        double v = std::max(opts.floor, a[free[k]] + alpha * delta[k]);
        // snap rounding residue onto the floor so the coordinate is
        // recognized as bound on the next iteration; the residue scales
        // with the pre-step value, not with the floor
        if (v - opts.floor <= 1e-14 * std::abs(a[free[k]])) v = opts.floor;
        a_new[free[k]] = v;
      }
      L_new = log_likelihood(A, labels, ParamVector(a_new), lambda);
      if (L_new >= L + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      // monotone line search exhausted; stationary up to rounding
      if (a.lpNorm<Eigen::Infinity>() > opts.radius)
        return finish(FitStatus::NonfiniteMaximum, iter, gnorm);
      return finish(FitStatus::Converged, iter, gnorm);
    }

    prev_a = a;
    prev_g = g;
    const double increase = L_new - L;
    a = a_new;
    L = L_new;

    if (a.lpNorm<Eigen::Infinity>() > opts.radius && increase < opts.stall)
      return finish(FitStatus::NonfiniteMaximum, iter, gnorm);
  }

  Vector g = log_likelihood_grad(A, labels, ParamVector(a), lambda);
  double gnorm = 0.0;
  for (int j = 0; j < n; ++j)
    if (!pinned[j] && a[j] > opts.floor * (1.0 + 1e-6)) gnorm = std::max(gnorm, std::abs(g[j]));
  return finish(FitStatus::MaxIterations, opts.max_iter, gnorm);
}

UniquenessCertificate uniqueness_certificate(const DataMatrix& A,
                                             const std::vector<int>& labels) {
  UniquenessCertificate cert;
  cert.n = A.n;

  auto rank_of = [&](int label) {
    std::vector<int> rows;
    for (int i = 0; i < A.size(); ++i)
      if (labels[i] == label) rows.push_back(i);
    if (rows.empty()) return 0;
    Matrix M = Matrix::Zero(int(rows.size()), A.n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (const auto& [j, v] : A.rows[rows[r]]) M(int(r), j) = v;
    Eigen::JacobiSVD<Matrix> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] <= 0.0) return 0;
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k)
      if (sv[k] > 1e-10 * sv[0]) ++rank;
    return rank;
  };

  cert.rank_pos = rank_of(1);
  cert.rank_neg = rank_of(0);
  cert.strictly_concave = cert.rank_pos == cert.n;
  cert.unique_max = cert.strictly_concave && cert.rank_neg == cert.n;
  return cert;
}

std::vector<SweepEntry> lambda_sweep(const DataMatrix& A, const std::vector<int>& labels,
                                     const std::vector<double>& lambdas,
                                     const FitOptions& opts) {
  std::vector<SweepEntry> out;
  Vector warm;
  double prev_lambda = 0.0;
  for (double lambda : lambdas) {
    SweepEntry entry;
    entry.lambda = lambda;
    Vector start;
    if (warm.size() > 0) start = warm * (prev_lambda / lambda);  // the exact optimum update
    try {
      entry.fit = fit_mle(A, labels, lambda, opts, start);
      entry.report = zero_one_loss(A, labels, entry.fit.a_star);
      warm = entry.fit.a_star.a;
      prev_lambda = lambda;
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace starfan

#ifndef STARFAN_OPTIM_HPP
#define STARFAN_OPTIM_HPP

#include "starfan/loss.hpp"

namespace starfan {

struct FitOptions {
  double tol = 1e-8;       // convergence: max-norm of the gradient on free coords
  int max_iter = 500;
  double floor = 1e-12;    // positivity floor; coords driven here are degenerate
  double radius = 1e6;     // beyond this the maximum is treated as nonfinite
  double stall = 1e-14;    // minimal per-iteration objective increase
};

enum class FitStatus { Converged, MaxIterations, Degenerate, NonfiniteMaximum, NoPositiveMass };

const char* fit_status_name(FitStatus s);

struct FitResult {
  ParamVector a_star;
  double objective = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
  std::vector<int> degenerate_rays;    // coordinates at the floor
  std::vector<int> no_positive_mass;   // coordinates with no positive-labeled support
  FitStatus status = FitStatus::MaxIterations;
};

struct UniquenessCertificate {
  int rank_pos = 0;  // rank of the positive-labeled rows
  int rank_neg = 0;  // rank of the negative-labeled rows
  int n = 0;
  bool strictly_concave = false;  // rank_pos == n
  bool unique_max = false;        // both ranks == n
};

/// Maximize the log-likelihood over a > floor by damped Newton ascent with
/// backtracking, falling back to Barzilai-Borwein gradient steps when the
/// Hessian is rank deficient. Coordinates without positive-labeled support
/// are pinned to the floor up front (provably degenerate).
/// Initialization is all-ones unless a warm start is given.
FitResult fit_mle(const DataMatrix& A, const std::vector<int>& labels, double lambda,
                  const FitOptions& opts = {}, const Vector& warm_start = Vector());

/// Rank check behind the strict-concavity / unique-maximum conditions.
/// Ranks use singular values above 1e-10 times the largest.
UniquenessCertificate uniqueness_certificate(const DataMatrix& A,
                                             const std::vector<int>& labels);

struct SweepEntry {
  double lambda = 0.0;
  FitResult fit;
  LossReport report;
  std::string error;  // nonempty if this lambda failed; the sweep continues
};

/// Fit each lambda in ascending order, warm-starting from the previous
/// optimum scaled by lambda_prev / lambda_next.
std::vector<SweepEntry> lambda_sweep(const DataMatrix& A, const std::vector<int>& labels,
                                     const std::vector<double>& lambdas,
                                     const FitOptions& opts = {});

}  // namespace starfan

#endif

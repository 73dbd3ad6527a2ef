#ifndef STARFAN_ARRANGEMENT_HPP
#define STARFAN_ARRANGEMENT_HPP

#include <cstdint>
#include <map>

#include "starfan/loss.hpp"

namespace starfan {

/// A half-open chamber of the data arrangement: the parameters on one
/// fixed side of every data hyperplane (closed "inside" <= 1, open
/// "outside" > 1), with a witness maximizing the minimal open-side slack.
struct Chamber {
  std::vector<int> sign_vector;  // per point: 0 = inside (<= 1), 1 = outside (> 1)
  ParamVector witness;
  LossReport report;   // the chamber's constant FP/FN/err, evaluated at the witness
  double margin = 0.0; // minimal open-side slack at the witness
};

struct Box {
  Vector lo;  // strictly positive
  Vector hi;
};

/// Enumerate all nonempty half-open chambers inside the box, in
/// lexicographic sign-vector order. Strict "> 1" sides are certified by
/// maximizing the minimum slack with an LP; a chamber counts as nonempty
/// iff the optimum slack is >= strict_eps. Prefix-infeasible sign vectors
/// prune their whole subtree. Throws TooManyPoints and InfeasibleBox.
std::vector<Chamber> enumerate_chambers(const DataMatrix& A, const std::vector<int>& labels,
                                        const Box& box, int max_points = 20,
                                        double strict_eps = 1e-9);

/// Histogram: err value -> number of chambers attaining it.
std::map<int, int> level_set_summary(const std::vector<Chamber>& chambers);

/// err at `steps` equally spaced points of the segment [a_from, a_to].
std::vector<int> segment_profile(const DataMatrix& A, const std::vector<int>& labels,
                                 const ParamVector& a_from, const ParamVector& a_to,
                                 int steps);

struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double step = 0.1;
  int nx = 0;
  int ny = 0;
};

/// Translational 0/1-loss over a 2-D lattice of translation vectors, plus
/// a per-node membership signature (bit i set iff point i is inside the
/// translated star) identifying the cell of the data star arrangement.
struct TranslationalGrid {
  GridSpec spec;
  std::vector<std::vector<int>> err;            // [iy][ix]
  std::vector<std::vector<uint64_t>> signature; // membership pattern (first 64 points)
};

/// Rows are evaluated in parallel; STARFAN_THREADS caps the thread count.
TranslationalGrid translational_grid(const Fan& fan, const LabeledDataset& data,
                                     const ParamVector& a, const GridSpec& grid);

/// Connected components of the zero set under 4-neighbor lattice
/// connectivity (a proxy for topological components, stated as such).
int count_zero_components(const TranslationalGrid& grid);

struct PathProfile {
  std::vector<int> err;
  int max_err = 0;
};

/// Joint 0/1-loss along the straight segment between (a1, t1) and (a2, t2)
/// in parameter-times-translation space, sampled at steps+1 points.
PathProfile joint_path_witness(const Fan& fan, const LabeledDataset& data,
                               const ParamVector& a1, const Vector& t1,
                               const ParamVector& a2, const Vector& t2, int steps);

}  // namespace starfan

#endif

#ifndef STARFAN_TEST_HELPERS_HPP
#define STARFAN_TEST_HELPERS_HPP

#include "starfan/datagen.hpp"
#include "starfan/loss.hpp"
#include "starfan/rng.hpp"

namespace starfan::testing {

// 1-D fan with ray order (-e1, +e1): the order the golden values below
// assume (kite_fan(1) orders them (+e1, -e1)).
inline Fan line_fan() {
  Vector neg(1), pos(1);
  neg[0] = -1.0;
  pos[0] = 1.0;
  return build_fan(1, {neg, pos}, {{0}, {1}});
}

// The two label vectors of the eight-point 1-D dataset.
inline std::vector<int> labels_plus() { return {0, 1, 1, 1, 1, 1, 0, 0}; }
inline std::vector<int> labels_minus() { return {1, 0, 0, 0, 0, 0, 1, 1}; }

inline DataMatrix line_matrix() { return data_matrix(line_fan(), line_dataset_1d()); }

// Reference optima of the 1-D log-likelihood with labels_plus, frozen
// from a high-precision scalar bisection oracle.
constexpr double kAStarHalf0 = 0.9270350385989371;   // lambda = 0.5
constexpr double kAStarHalf1 = 0.4761267744090844;
constexpr double kAStarTwo0 = 0.23175875964973428;   // lambda = 2
constexpr double kAStarTwo1 = 0.1190316936022711;

// log_likelihood(a = (1,1), lambda = 0.5, labels_plus), frozen from
// direct evaluation of the defining sum.
constexpr double kLLOnes = -8.535337008833995;

// The fixed star and 3-point diagonal dataset of the translation examples.
inline ParamVector diagonal_star_params() {
  Vector a(8);
  for (int i = 0; i < 8; ++i) a[i] = (i % 2 == 0) ? 1.0 / 3.0 : 3.0;
  return ParamVector(a);
}

inline Vector vec2(double x, double y) {
  Vector v(2);
  v[0] = x;
  v[1] = y;
  return v;
}

inline Vector random_point(Rng& rng, int d, double scale) {
  Vector x(d);
  for (int j = 0; j < d; ++j) x[j] = rng.uniform(-scale, scale);
  return x;
}

inline ParamVector random_params(Rng& rng, int n, double lo = 0.1, double hi = 3.0) {
  Vector a(n);
  for (int j = 0; j < n; ++j) a[j] = rng.uniform(lo, hi);
  return ParamVector(a);
}

}  // namespace starfan::testing

#endif

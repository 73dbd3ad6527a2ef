#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "helpers.hpp"

using namespace starfan;
using namespace starfan::testing;

namespace {

ParamVector pv2(double a1, double a2) {
  Vector a(2);
  a << a1, a2;
  return ParamVector(a);
}

// Random 1-D dataset on the line fan with both labels present.
LabeledDataset random_line_data(Rng& rng, int m) {
  LabeledDataset data;
  for (int i = 0; i < m; ++i) {
    Vector x(1);
    do {
      x[0] = rng.uniform(-4.0, 4.0);
    } while (std::abs(x[0]) < 1e-3);
    data.points.push_back(x);
    data.labels.push_back(i % 2);
  }
  return data;
}

}  // namespace

TEST_CASE("data_matrix rows are the coefficient vectors") {
  const DataMatrix A = line_matrix();
  REQUIRE(A.size() == 8);
  REQUIRE(A.n == 2);
  const double expected[8][2] = {{4, 0}, {3, 0}, {2, 0}, {1, 0},
                                 {0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const Matrix dense = A.dense();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(dense(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-12));

  // the origin has an empty row
  LabeledDataset zero;
  zero.points.push_back(Vector::Zero(1));
  zero.labels.push_back(0);
  CHECK(data_matrix(line_fan(), zero).rows[0].empty());

  // diagonal points land on the single diagonal ray of the type-B fan
  const DataMatrix D = data_matrix(type_b_fan(2), diagonal_dataset_2d());
  for (int i = 0; i < 3; ++i) {
    REQUIRE(D.rows[i].size() == 1);
    CHECK(D.rows[i][0].first == 1);
    CHECK(D.rows[i][0].second == doctest::Approx(double(i + 1)).epsilon(1e-12));
  }
}

TEST_CASE("zero_one_loss golden values (complemented labels)") {
  const DataMatrix A = line_matrix();
  const auto lm = labels_minus();

  LossReport r = zero_one_loss(A, lm, pv2(1.0 / 8.0, 1.0 / 8.0));
  CHECK(r.fp == 0);
  CHECK(r.fn == 3);
  CHECK(r.err == 3);

  CHECK(zero_one_loss(A, lm, pv2(2.0 / 7.0, 3.0 / 7.0)).err == 0);

  r = zero_one_loss(A, lm, pv2(6.0 / 5.0, 5.0 / 4.0));
  CHECK(r.fp == 5);
  CHECK(r.fn == 0);
  CHECK(r.err == 5);
  CHECK(int(r.per_point.size()) == 8);
}

TEST_CASE("log_likelihood golden value and identities") {
  const DataMatrix A = line_matrix();
  const auto lp = labels_plus();
  CHECK(log_likelihood(A, lp, pv2(1, 1), 0.5) ==
        doctest::Approx(-8.535337008833995).epsilon(1e-14));

  // L(t*lambda, a) = L(lambda, t*a)
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ParamVector a = random_params(rng, 2);
    const double lambda = rng.uniform(0.1, 3.0);
    const double t = rng.uniform(0.2, 5.0);
    CHECK(log_likelihood(A, lp, a, t * lambda) ==
          doctest::Approx(log_likelihood(A, lp, ParamVector((t * a.a).eval()), lambda))
              .epsilon(1e-10));
  }

  // a single negative point gives a linear objective
  DataMatrix single;
  single.n = 2;
  single.rows.push_back({{0, 2.0}});
  CHECK(log_likelihood(single, {0}, pv2(0.7, 1.0), 1.5) ==
        doctest::Approx(-1.5 * 2.0 * 0.7).epsilon(1e-14));

  // a positive-labeled point at the star center is infeasible
  DataMatrix at_zero;
  at_zero.n = 2;
  at_zero.rows.push_back({});
  CHECK_THROWS_WITH_AS(log_likelihood(at_zero, {1}, pv2(1, 1), 1.0),
                       doctest::Contains("UndefinedAtZero"), Error);
}

TEST_CASE("gradient matches central differences") {
  Rng rng(101);
  const Fan fan = line_fan();
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledDataset data = random_line_data(rng, 8);
    const DataMatrix A = data_matrix(fan, data);
    const ParamVector a = random_params(rng, 2, 0.2, 2.0);
    const double lambda = rng.uniform(0.2, 3.0);
    const Vector g = log_likelihood_grad(A, data.labels, a, lambda);
    const double h = 1e-6;
    for (int j = 0; j < 2; ++j) {
      Vector ap = a.a, am = a.a;
      ap[j] += h;
      am[j] -= h;
      const double fd = (log_likelihood(A, data.labels, ParamVector(ap), lambda) -
                         log_likelihood(A, data.labels, ParamVector(am), lambda)) /
                        (2 * h);
      CHECK(std::abs(g[j] - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("gradient of an all-negative dataset is the constant column sum") {
  const DataMatrix A = line_matrix();
  const std::vector<int> zeros(8, 0);
  const double lambda = 1.7;
  const Matrix dense = A.dense();
  for (const ParamVector& a : {pv2(0.3, 0.4), pv2(2.0, 5.0)}) {
    const Vector g = log_likelihood_grad(A, zeros, a, lambda);
    const Vector expect = -lambda * dense.colwise().sum().transpose();
    CHECK((g - expect).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("gradient vanishes at the known optimum") {
  const DataMatrix A = line_matrix();
  const Vector g =
      log_likelihood_grad(A, labels_plus(), pv2(kAStarHalf0, kAStarHalf1), 0.5);
  CHECK(g.lpNorm<Eigen::Infinity>() <= 1e-6);
}

TEST_CASE("Hessian: finite differences, zero case, negative semidefinite") {
  Rng rng(103);
  const Fan fan = line_fan();
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledDataset data = random_line_data(rng, 8);
    const DataMatrix A = data_matrix(fan, data);
    const ParamVector a = random_params(rng, 2, 0.2, 2.0);
    const double lambda = rng.uniform(0.2, 3.0);
    const Matrix H = log_likelihood_hess(A, data.labels, a, lambda);

    const double h = 1e-6;
    for (int j = 0; j < 2; ++j) {
      Vector ap = a.a, am = a.a;
      ap[j] += h;
      am[j] -= h;
      const Vector fd = (log_likelihood_grad(A, data.labels, ParamVector(ap), lambda) -
                         log_likelihood_grad(A, data.labels, ParamVector(am), lambda)) /
                        (2 * h);
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(H(k, j) - fd[k]) <= 1e-5 * std::max(1.0, std::abs(fd[k])));
    }

    Eigen::SelfAdjointEigenSolver<Matrix> eig(H);
    CHECK(eig.eigenvalues().maxCoeff() <= 1e-10);
  }

  const DataMatrix A = line_matrix();
  CHECK(log_likelihood_hess(A, std::vector<int>(8, 0), pv2(1, 1), 1.0).norm() == 0.0);
}

TEST_CASE("log_likelihood is midpoint concave") {
  Rng rng(107);
  const DataMatrix A = line_matrix();
  const auto lp = labels_plus();
  for (int trial = 0; trial < 500; ++trial) {
    const ParamVector a1 = random_params(rng, 2, 0.05, 3.0);
    const ParamVector a2 = random_params(rng, 2, 0.05, 3.0);
    const double lambda = rng.uniform(0.1, 4.0);
    const ParamVector mid(((a1.a + a2.a) / 2).eval());
    CHECK(log_likelihood(A, lp, mid, lambda) >=
          (log_likelihood(A, lp, a1, lambda) + log_likelihood(A, lp, a2, lambda)) / 2 - 1e-9);
  }
}

TEST_CASE("FP grows and FN shrinks when a grows") {
  Rng rng(109);
  const Fan fan = line_fan();
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledDataset data = random_line_data(rng, 10);
    const DataMatrix A = data_matrix(fan, data);
    const ParamVector a = random_params(rng, 2, 0.05, 2.0);
    Vector bump(2);
    bump << rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0);
    const ParamVector b((a.a + bump).eval());
    const LossReport ra = zero_one_loss(A, data.labels, a);
    const LossReport rb = zero_one_loss(A, data.labels, b);
    CHECK(rb.fp >= ra.fp);
    CHECK(rb.fn <= ra.fn);
  }
}

TEST_CASE("translational losses") {
  const Fan fan = type_b_fan(2);
  const ParamVector a = diagonal_star_params();
  const LabeledDataset data = diagonal_dataset_2d();

  // t = 0 reduces to the untranslated loss
  const DataMatrix A = data_matrix(fan, data);
  CHECK(translational_zero_one_loss(fan, data, a, Vector::Zero(2)).err ==
        zero_one_loss(A, data.labels, a).err);

  CHECK(translational_zero_one_loss(fan, data, a, vec2(2.9, 0.9)).err == 0);
  CHECK(translational_zero_one_loss(fan, data, a, Vector::Zero(2)).err >= 1);
  CHECK(joint_loss(fan, data, a, vec2(2.9, 0.9)).err == 0);

  const double lambda = 1.3;
  CHECK(translational_log_likelihood(fan, data, a, Vector::Zero(2), lambda) ==
        doctest::Approx(log_likelihood(A, data.labels, a, lambda)).epsilon(1e-12));

  // divergence toward a positive-labeled point
  const double near = translational_log_likelihood(fan, data, a, vec2(2.0 - 1e-9, 2.0), lambda);
  CHECK(near < -15.0);
}

TEST_CASE("translational likelihood is concave within one cell") {
  const Fan fan = type_b_fan(2);
  const ParamVector a = diagonal_star_params();
  const LabeledDataset data = diagonal_dataset_2d();
  Rng rng(113);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 50; ++trial) {
    const Vector t1 = random_point(rng, 2, 1.0);
    const Vector t2 = (t1 + random_point(rng, 2, 0.05)).eval();
    // the segment must keep every point in a fixed cone of the fan
    bool same_cell = true;
    for (int k = 0; k <= 10 && same_cell; ++k) {
      const Vector t = (1.0 - 0.1 * k) * t1 + 0.1 * k * t2;
      for (int i = 0; i < data.size(); ++i)
        if (fan.coords((data.points[i] - t).eval()).cone_id !=
            fan.coords((data.points[i] - t1).eval()).cone_id)
          same_cell = false;
    }
    if (!same_cell) continue;
    bool feasible = true;
    double L1 = 0, L2 = 0, Lm = 0;
    try {
      L1 = translational_log_likelihood(fan, data, a, t1, 0.8);
      L2 = translational_log_likelihood(fan, data, a, t2, 0.8);
      Lm = translational_log_likelihood(fan, data, a, ((t1 + t2) / 2).eval(), 0.8);
    } catch (const Error&) {
      feasible = false;
    }
    if (!feasible) continue;
    CHECK(Lm >= (L1 + L2) / 2 - 1e-9);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("loss is constant on a fixed sign-vector region") {
  const DataMatrix A = line_matrix();
  const auto lm = labels_minus();
  Rng rng(127);
  // sample inside the chamber (1/4, 1/3) x (1/4, 1/3): signs fixed there
  int base = -1;
  for (int s = 0; s < 20; ++s) {
    Vector a(2);
    a << rng.uniform(0.26, 0.32), rng.uniform(0.26, 0.32);
    const int err = zero_one_loss(A, lm, ParamVector(a)).err;
    if (base < 0) base = err;
    CHECK(err == base);
  }
}

TEST_CASE("pairwise_sum and log1mexp") {
  std::vector<double> terms;
  Rng rng(131);
  double naive = 0.0;
  for (int i = 0; i < 1001; ++i) {
    terms.push_back(rng.uniform(-1.0, 1.0));
    naive += terms.back();
  }
  CHECK(pairwise_sum(terms) == doctest::Approx(naive).epsilon(1e-12));
  CHECK(pairwise_sum({}) == 0.0);

  for (double z : {1e-12, 1e-6, 0.1, 0.5, M_LN2, 1.0, 5.0, 40.0}) {
    const double ref = std::log1p(-std::exp(-z));
    if (std::isfinite(ref) && z >= 1e-6)
      CHECK(log1mexp(z) == doctest::Approx(ref).epsilon(1e-9));
    CHECK(std::isfinite(log1mexp(z)));
  }
  // near zero the naive form loses all precision; the stable form tracks log(z)
  CHECK(log1mexp(1e-300) == doctest::Approx(std::log(1e-300)).epsilon(1e-12));
}

#include "doctest.h"
#include "helpers.hpp"

using namespace starfan;
using namespace starfan::testing;

TEST_CASE("ParamVector requires strictly positive entries") {
  Vector bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS((void)ParamVector(bad), std::invalid_argument);
  Vector floor_entry(2);
  floor_entry << 1.0, kDegeneracyFloor;
  CHECK(ParamVector(floor_entry).degenerate_indices() == std::vector<int>{1});
}

TEST_CASE("evaluate golden values on the line fan") {
  const Fan fan = line_fan();
  Vector a(2);
  a << 2.0 / 7.0, 3.0 / 7.0;
  const ParamVector pv(a);
  Vector x(1);
  x[0] = -3.0;
  CHECK(evaluate(fan, pv, x) == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  x[0] = 0.0;
  CHECK(evaluate(fan, pv, x) == 0.0);
  // a generator evaluates to its own parameter
  CHECK(evaluate(fan, pv, fan.ray(1)) == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("classify uses the closed star") {
  const Fan fan = line_fan();
  Vector a(2);
  a << 2.0 / 7.0, 3.0 / 7.0;
  const ParamVector pv(a);
  Vector x(1);
  x[0] = -3.0;
  CHECK(classify(fan, pv, x) == 0);  // 6/7 <= 1
  x[0] = -4.0;
  CHECK(classify(fan, pv, x) == 1);  // 8/7 > 1
  x[0] = 0.0;
  CHECK(classify(fan, pv, x) == 0);
}

TEST_CASE("classify_translated matches classify at t = 0") {
  const Fan fan = type_b_fan(2);
  Rng rng(11);
  const ParamVector a = random_params(rng, 8);
  TranslatedStar s{a, Vector::Zero(2)};
  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = random_point(rng, 2, 3.0);
    CHECK(classify_translated(fan, s, x) == classify(fan, a, x));
  }
}

TEST_CASE("two translations classify the diagonal points perfectly") {
  const Fan fan = type_b_fan(2);
  const ParamVector a = diagonal_star_params();
  const LabeledDataset data = diagonal_dataset_2d();
  for (const Vector& t : {vec2(2.9, 0.9), vec2(0.9, 3.05)}) {
    TranslatedStar s{a, t};
    for (int i = 0; i < data.size(); ++i)
      CHECK(classify_translated(fan, s, data.points[i]) == data.labels[i]);
  }
}

TEST_CASE("star_vertices") {
  const Fan tb2 = type_b_fan(2);
  const ParamVector ones(Vector::Ones(8).eval());
  const auto vertices = star_vertices(tb2, ones);
  for (int i = 0; i < 8; ++i) CHECK((vertices[i] - tb2.ray(i)).norm() == 0.0);

  const Fan line = line_fan();
  Vector a(2);
  a << 6.0 / 5.0, 5.0 / 4.0;
  const auto v = star_vertices(line, ParamVector(a));
  CHECK(v[0][0] == doctest::Approx(-5.0 / 6.0).epsilon(1e-12));
  CHECK(v[1][0] == doctest::Approx(4.0 / 5.0).epsilon(1e-12));

  Vector deg(2);
  deg << 1.0, kDegeneracyFloor;
  CHECK_THROWS_WITH_AS(star_vertices(line, ParamVector(deg)),
                       doctest::Contains("DegenerateRay"), Error);
}

TEST_CASE("shatter_params realizes every generator labeling") {
  const Fan line = line_fan();
  const ParamVector zeros = shatter_params(line, {0, 0});
  CHECK(zeros.a[0] == 0.5);
  CHECK(classify(line, zeros, line.ray(0)) == 0);
  const ParamVector ones = shatter_params(line, {1, 1});
  CHECK(ones.a[0] == 1.5);
  CHECK(classify(line, ones, line.ray(1)) == 1);

  const Fan tb2 = type_b_fan(2);
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<int> labels(8);
    for (int i = 0; i < 8; ++i) labels[i] = (mask >> i) & 1;
    const ParamVector a = shatter_params(tb2, labels);
    for (int i = 0; i < 8; ++i) CHECK(classify(tb2, a, tb2.ray(i)) == labels[i]);
  }
}

TEST_CASE("translation_membership equals membership of x - t in the star") {
  const Fan fan = type_b_fan(2);
  Rng rng(23);
  const ParamVector a = random_params(rng, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const Vector x = random_point(rng, 2, 3.0);
    const Vector t = random_point(rng, 2, 3.0);
    CHECK(translation_membership(fan, a, x, t) == (classify(fan, a, (x - t).eval()) == 0));
  }
  Vector x = vec2(1.0, -0.5);
  CHECK(translation_membership(fan, a, x, x));
  // t farther than the outer star radius cannot keep x inside
  const double reach = std::sqrt(2.0) / a.a.minCoeff();
  CHECK_FALSE(translation_membership(fan, a, x, (x + vec2(reach + 1.0, 0)).eval()));
}

TEST_CASE("evaluate is monotone in a and scale-compatible") {
  const Fan fan = kite_fan(3);
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const ParamVector a = random_params(rng, 6);
    Vector bump(6);
    for (int j = 0; j < 6; ++j) bump[j] = rng.uniform(0.0, 1.0);
    const ParamVector b((a.a + bump).eval());
    const Vector x = random_point(rng, 3, 4.0);
    CHECK(evaluate(fan, b, x) >= evaluate(fan, a, x) - 1e-12);
    const double s = rng.uniform(0.1, 5.0);
    CHECK(evaluate(fan, ParamVector((a.a / s).eval()), (s * x).eval()) ==
          doctest::Approx(evaluate(fan, a, x)).epsilon(1e-10));
  }
}

TEST_CASE("the 0-class is star-shaped around the origin") {
  const Fan fan = type_b_fan(2);
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const ParamVector a = random_params(rng, 8);
    const Vector x = random_point(rng, 2, 3.0);
    if (classify(fan, a, x) != 0) continue;
    for (int k = 0; k <= 10; ++k)
      CHECK(classify(fan, a, (0.1 * k * x).eval()) == 0);
  }
}

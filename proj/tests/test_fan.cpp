#include <cstdio>

#include "doctest.h"
#include "helpers.hpp"

using namespace starfan;
using starfan::testing::vec2;

namespace {

std::vector<Vector> square_rays() {
  return {vec2(1, 0), vec2(0, 1), vec2(-1, 0), vec2(0, -1)};
}

}  // namespace

TEST_CASE("build_fan accepts the four-quadrant fan") {
  const Fan fan = build_fan(2, square_rays(), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(fan.num_rays() == 4);
  CHECK(fan.num_cones() == 4);
}

TEST_CASE("build_fan rejects incomplete fans") {
  CHECK_THROWS_WITH_AS(build_fan(2, square_rays(), {{0, 1}, {2, 3}}), doctest::Contains("NotComplete"), Error);
  CHECK_THROWS_WITH_AS(build_fan(2, {vec2(1, 0), vec2(1, 1)}, {{0, 1}}),
                       doctest::Contains("NotComplete"), Error);
}

TEST_CASE("build_fan rejects singular cones") {
  CHECK_THROWS_WITH_AS(build_fan(2, {vec2(1, 0), vec2(2, 0), vec2(0, 1), vec2(0, -1)},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                       doctest::Contains("SingularCone"), Error);
}

TEST_CASE("build_fan rejects overlapping cones") {
  // the second pair of cones double-covers the right half-plane
  CHECK_THROWS_AS(build_fan(2, {vec2(1, 0), vec2(0, 1), vec2(-1, 0), vec2(0, -1), vec2(1, 1)},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}),
                  Error);
}

TEST_CASE("kite fans have 2d rays and 2^d orthant cones") {
  const Fan f1 = kite_fan(1);
  CHECK(f1.num_rays() == 2);
  CHECK(f1.num_cones() == 2);
  CHECK(f1.ray(0)[0] == 1.0);
  CHECK(f1.ray(1)[0] == -1.0);

  const Fan f2 = kite_fan(2);
  CHECK(f2.num_rays() == 4);
  CHECK(f2.num_cones() == 4);

  const Fan f3 = kite_fan(3);
  CHECK(f3.num_rays() == 6);
  CHECK(f3.num_cones() == 8);
}

TEST_CASE("type-B fan layout") {
  const Fan f2 = type_b_fan(2);
  CHECK(f2.num_rays() == 8);
  CHECK(f2.num_cones() == 8);
  const double expected[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                 {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (int i = 0; i < 8; ++i) {
    CHECK(f2.ray(i)[0] == expected[i][0]);
    CHECK(f2.ray(i)[1] == expected[i][1]);
  }

  const Fan f1 = type_b_fan(1);
  CHECK(f1.num_rays() == 2);
  CHECK(f1.num_cones() == 2);

  const Fan f3 = type_b_fan(3);
  CHECK(f3.num_rays() == 26);
  CHECK(f3.num_cones() == 48);

  CHECK_THROWS_WITH_AS(type_b_fan(7), doctest::Contains("SizeLimit"), Error);
}

TEST_CASE("fan_2d_from_rays") {
  std::vector<Vector> octagon;
  for (int k = 0; k < 8; ++k)
    octagon.push_back(vec2(std::cos(k * M_PI / 4), std::sin(k * M_PI / 4)));
  CHECK(fan_2d_from_rays(octagon).num_cones() == 8);

  std::vector<Vector> three;
  for (int k = 0; k < 3; ++k)
    three.push_back(vec2(std::cos(2 * k * M_PI / 3), std::sin(2 * k * M_PI / 3)));
  CHECK(fan_2d_from_rays(three).num_cones() == 3);

  CHECK_THROWS_WITH_AS(fan_2d_from_rays({vec2(1, 0), vec2(2, 0), vec2(0, 1)}),
                       doctest::Contains("DuplicateDirection"), Error);
}

TEST_CASE("coords golden values") {
  const Fan kite2 = kite_fan(2);
  const CoefficientVector c = kite2.coords(vec2(2, 3));
  CHECK(c.entries[0] == doctest::Approx(2).epsilon(1e-12));
  CHECK(c.entries[1] == doctest::Approx(0));
  CHECK(c.entries[2] == doctest::Approx(3).epsilon(1e-12));
  CHECK(c.entries[3] == doctest::Approx(0));

  const Fan tb2 = type_b_fan(2);
  const CoefficientVector ct = tb2.coords(vec2(3, 1));
  CHECK(ct.entries[0] == doctest::Approx(2).epsilon(1e-12));  // x1 - x2 on (1,0)
  CHECK(ct.entries[1] == doctest::Approx(1).epsilon(1e-12));  // x2 on (1,1)
  for (int i = 2; i < 8; ++i) CHECK(ct.entries[i] == 0.0);

  CHECK(kite2.coords(Vector::Zero(2)).support.empty());

  const Fan line = testing::line_fan();
  Vector xm(1);
  xm[0] = -3.0;
  const CoefficientVector cm = line.coords(xm);
  CHECK(cm.entries[0] == doctest::Approx(3).epsilon(1e-12));
  CHECK(cm.entries[1] == 0.0);
}

TEST_CASE("coords invariants on built-in fans") {
  std::vector<Fan> fans;
  fans.push_back(kite_fan(1));
  fans.push_back(kite_fan(2));
  fans.push_back(kite_fan(3));
  fans.push_back(type_b_fan(2));
  fans.push_back(type_b_fan(3));
  Rng rng(42);
  for (const Fan& fan : fans) {
    const int d = fan.dim();
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = testing::random_point(rng, d, 5.0);
      const CoefficientVector c = fan.coords(x);
      CHECK(int(c.support.size()) <= d);
      Vector rec = Vector::Zero(d);
      for (int i : c.support) {
        CHECK(c.entries[i] >= 0.0);
        rec += c.entries[i] * fan.ray(i);
      }
      CHECK((rec - x).norm() <= 1e-10 * (1.0 + x.norm()));
      // positive homogeneity
      const CoefficientVector c2 = fan.coords((2.5 * x).eval());
      CHECK((c2.entries - 2.5 * c.entries).lpNorm<Eigen::Infinity>() <= 1e-10 * (1 + x.norm()));
    }
    // generators map to unit coefficient vectors
    for (int i = 0; i < fan.num_rays(); ++i) {
      const CoefficientVector c = fan.coords(fan.ray(i));
      CHECK(c.entries[i] == doctest::Approx(1).epsilon(1e-10));
      CHECK(c.entries.sum() == doctest::Approx(1).epsilon(1e-10));
    }
  }
}

TEST_CASE("kite coords closed form") {
  const Fan fan = kite_fan(3);
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector x = testing::random_point(rng, 3, 4.0);
    const CoefficientVector c = fan.coords(x);
    for (int j = 0; j < 3; ++j) {
      CHECK(c.entries[2 * j] == doctest::Approx(std::max(0.0, x[j])).epsilon(1e-12));
      CHECK(c.entries[2 * j + 1] == doctest::Approx(std::max(0.0, -x[j])).epsilon(1e-12));
    }
  }
}

TEST_CASE("fan JSON round trip and names") {
  const Fan fan = type_b_fan(2);
  const std::string path = "tmp_fan_roundtrip.json";
  write_fan_json(fan, path);
  const Fan back = read_fan_json(path);
  REQUIRE(back.num_rays() == fan.num_rays());
  REQUIRE(back.num_cones() == fan.num_cones());
  for (int i = 0; i < fan.num_rays(); ++i) CHECK((back.ray(i) - fan.ray(i)).norm() == 0.0);
  for (int c = 0; c < fan.num_cones(); ++c) CHECK(back.cone(c) == fan.cone(c));
  std::remove(path.c_str());

  CHECK(fan_by_name("kite:2").num_rays() == 4);
  CHECK(fan_by_name("typeb:3").num_cones() == 48);
  CHECK_THROWS_AS(fan_by_name("no_such_file.json"), Error);
}

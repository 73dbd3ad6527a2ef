#include "starfan/fan.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "starfan/rng.hpp"

namespace starfan {

namespace {

constexpr double kMembershipTol = 1e-9;

std::string vec_to_string(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

CoefficientVector Fan::coords(const Vector& x) const {
  if (x.size() != dim_)
    throw Error(Errc::DimensionError, "point has dimension " + std::to_string(x.size()) +
                                          ", fan has " + std::to_string(dim_));
  double best_violation = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < num_cones(); ++c) {
    Vector mu = cone_inverses_[c] * x;
    const double worst = mu.minCoeff();
    if (worst >= -kMembershipTol) {
      CoefficientVector cv;
      cv.entries = Vector::Zero(num_rays());
      cv.cone_id = c;
      for (int j = 0; j < dim_; ++j) {
        const double m = std::max(mu[j], 0.0);
        if (m > 0.0) {
          cv.entries[cones_[c][j]] = m;
          cv.support.push_back(cones_[c][j]);
        }
      }
      std::sort(cv.support.begin(), cv.support.end());
      return cv;
    }
    best_violation = std::max(best_violation, worst);
  }
  throw Error(Errc::NoCone, "no maximal cone contains " + vec_to_string(x) +
                                " (best violation " + std::to_string(best_violation) + ")");
}

Fan build_fan(int dim, const std::vector<Vector>& rays,
              const std::vector<std::vector<int>>& maximal_cones, uint64_t seed,
              const std::string& name) {
  if (dim < 1) throw Error(Errc::DimensionError, "dim must be >= 1");
  const int n = int(rays.size());
  for (const auto& r : rays)
    if (r.size() != dim) throw Error(Errc::DimensionError, "ray dimension mismatch");

  Fan fan;
  fan.dim_ = dim;
  fan.rays_ = rays;
  fan.name_ = name;

  for (const auto& cone : maximal_cones) {
    if (int(cone.size()) != dim)
      throw Error(Errc::DimensionError, "maximal cone must have exactly dim ray indices");
    Matrix V(dim, dim);
    for (int j = 0; j < dim; ++j) {
      if (cone[j] < 0 || cone[j] >= n) throw Error(Errc::DimensionError, "ray index out of range");
      V.col(j) = rays[cone[j]];
    }
    Eigen::FullPivLU<Matrix> lu(V);
    if (!lu.isInvertible())
      throw Error(Errc::SingularCone, "cone " + std::to_string(fan.cones_.size()) +
                                          " has a singular ray matrix");
    fan.cones_.push_back(cone);
    fan.cone_inverses_.push_back(lu.inverse());
  }

  // Desk-scale validation: sampled unit directions must be covered by at
  // least one cone and strictly interior to at most one.
  Rng rng(seed);
  const int probes = 10 * (1 << dim);
  for (int p = 0; p < probes; ++p) {
    Vector u(dim);
    do {
      for (int j = 0; j < dim; ++j) u[j] = rng.normal();
    } while (u.norm() < 1e-8);
    u /= u.norm();

    int covered = -1, interior = -1;
    for (int c = 0; c < fan.num_cones(); ++c) {
      Vector mu = fan.cone_inverses_[c] * u;
      if (mu.minCoeff() >= -kMembershipTol && covered < 0) covered = c;
      if (mu.minCoeff() > kMembershipTol) {
        if (interior >= 0)
          throw Error(Errc::Overlapping,
                      "direction " + vec_to_string(u) + " is interior to cones " +
                          std::to_string(interior) + " and " + std::to_string(c));
        interior = c;
      }
    }
    if (covered < 0)
      throw Error(Errc::NotComplete, "direction " + vec_to_string(u) + " is not covered");
  }
  return fan;
}

Fan kite_fan(int d) {
  if (d < 1) throw Error(Errc::DimensionError, "d must be >= 1");
  std::vector<Vector> rays;
  for (int i = 0; i < d; ++i) {
    Vector plus = Vector::Zero(d), minus = Vector::Zero(d);
    plus[i] = 1.0;
    minus[i] = -1.0;
    rays.push_back(plus);
    rays.push_back(minus);
  }
  std::vector<std::vector<int>> cones;
  for (int bits = 0; bits < (1 << d); ++bits) {
    std::vector<int> cone(d);
    for (int i = 0; i < d; ++i) cone[i] = 2 * i + ((bits >> i) & 1);
    cones.push_back(cone);
  }
  return build_fan(d, rays, cones, 20240901, "kite:" + std::to_string(d));
}

Fan type_b_fan(int d, int max_dim) {
  if (d < 1) throw Error(Errc::DimensionError, "d must be >= 1");
  if (d > max_dim)
    throw Error(Errc::SizeLimit, "type B fan has 3^d - 1 rays; d capped at " +
                                     std::to_string(max_dim));

  // Rays: all nonzero sign vectors. For d = 2 keep the angular order
  // v1=(1,0), v2=(1,1), ..., v8=(1,-1); otherwise mixed-radix order.
  std::vector<Vector> rays;
  std::vector<int> digits(d, -1);
  while (true) {
    Vector r(d);
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      r[i] = digits[i];
      if (digits[i] != 0) zero = false;
    }
    if (!zero) rays.push_back(r);
    int i = 0;
    for (; i < d; ++i) {
      if (digits[i] < 1) {
        ++digits[i];
        break;
      }
      digits[i] = -1;
    }
    if (i == d) break;
  }
  if (d == 2) {
    std::sort(rays.begin(), rays.end(), [](const Vector& a, const Vector& b) {
      return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]) - 1e-12;
    });
    std::rotate(rays.begin(),
                std::find_if(rays.begin(), rays.end(),
                             [](const Vector& r) { return r[0] == 1 && r[1] == 0; }),
                rays.end());
  }

  std::map<std::vector<int>, int> ray_index;
  for (int i = 0; i < int(rays.size()); ++i) {
    std::vector<int> key(d);
    for (int j = 0; j < d; ++j) key[j] = int(rays[i][j]);
    ray_index[key] = i;
  }

  // One maximal cone per (sign vector, permutation). With sigma ordering
  // |x| ascending, the generators are v_i = sum_{j>=i} sgn(x_sigma(j)) e_sigma(j).
  std::vector<std::vector<int>> cones;
  std::vector<int> perm(d);
  for (int bits = 0; bits < (1 << d); ++bits) {
    for (int i = 0; i < d; ++i) perm[i] = i;
    do {
      std::vector<int> cone(d);
      for (int i = 0; i < d; ++i) {
        std::vector<int> gen(d, 0);
        for (int j = i; j < d; ++j) gen[perm[j]] = ((bits >> perm[j]) & 1) ? -1 : 1;
        cone[i] = ray_index.at(gen);
      }
      std::sort(cone.begin(), cone.end());
      cones.push_back(cone);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return build_fan(d, rays, cones, 20240901, "typeb:" + std::to_string(d));
}

Fan fan_2d_from_rays(const std::vector<Vector>& rays) {
  if (rays.size() < 3) throw Error(Errc::DimensionError, "need at least 3 rays");
  for (const auto& r : rays)
    if (r.size() != 2 || r.norm() < 1e-12)
      throw Error(Errc::DimensionError, "rays must be nonzero 2-D vectors");

  std::vector<Vector> sorted = rays;
  std::sort(sorted.begin(), sorted.end(), [](const Vector& a, const Vector& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });
  for (size_t i = 0; i < sorted.size(); ++i) {
    const Vector& a = sorted[i];
    const Vector& b = sorted[(i + 1) % sorted.size()];
    const double cross = a[0] * b[1] - a[1] * b[0];
    const double dot = a.dot(b);
    if (std::abs(cross) < 1e-12 * a.norm() * b.norm() && dot > 0)
      throw Error(Errc::DuplicateDirection,
                  "rays " + vec_to_string(a) + " and " + vec_to_string(b) +
                      " point in the same direction");
  }
  std::vector<std::vector<int>> cones;
  for (int i = 0; i < int(sorted.size()); ++i)
    cones.push_back({i, (i + 1) % int(sorted.size())});
  return build_fan(2, sorted, cones, 20240901, "rays2d");
}

Fan read_fan_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open fan file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, std::string("bad fan JSON: ") + e.what());
  }
  const int dim = j.at("dim").get<int>();
  std::vector<Vector> rays;
  for (const auto& jr : j.at("rays")) {
    Vector r(dim);
    if (int(jr.size()) != dim) throw Error(Errc::ParseError, "ray dimension mismatch");
    for (int i = 0; i < dim; ++i) r[i] = jr[i].get<double>();
    rays.push_back(r);
  }
  std::vector<std::vector<int>> cones;
  for (const auto& jc : j.at("cones")) {
    std::vector<int> cone;
    for (const auto& idx : jc) cone.push_back(idx.get<int>() - 1);  // file is 1-based
    cones.push_back(cone);
  }
  return build_fan(dim, rays, cones, 20240901, path);
}

void write_fan_json(const Fan& fan, const std::string& path) {
  nlohmann::json j;
  j["dim"] = fan.dim();
  auto& jr = j["rays"] = nlohmann::json::array();
  for (const auto& r : fan.rays()) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < r.size(); ++i) row.push_back(r[i]);
    jr.push_back(row);
  }
  auto& jc = j["cones"] = nlohmann::json::array();
  for (const auto& c : fan.cones()) {
    nlohmann::json cone = nlohmann::json::array();
    for (int idx : c) cone.push_back(idx + 1);
    jc.push_back(cone);
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

Fan fan_by_name(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "kite") return kite_fan(std::stoi(arg));
    if (kind == "typeb") return type_b_fan(std::stoi(arg));
    if (kind == "rays2d") {
      std::ifstream in(arg);
      if (!in) throw Error(Errc::ParseError, "cannot open ray file " + arg);
      std::vector<Vector> rays;
      double x, y;
      while (in >> x >> y) {
        Vector r(2);
        r << x, y;
        rays.push_back(r);
      }
      return fan_2d_from_rays(rays);
    }
  }
  return read_fan_json(spec);
}

}  // namespace starfan

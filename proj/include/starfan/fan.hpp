#ifndef STARFAN_FAN_HPP
#define STARFAN_FAN_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "starfan/errors.hpp"

namespace starfan {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// The coefficient vector of a point: the unique nonnegative sparse vector
/// expressing the point in the generators of the cone containing it.
struct CoefficientVector {
  Vector entries;            // length n, >= 0, at most d nonzeros
  std::vector<int> support;  // indices of the nonzero entries
  int cone_id = -1;          // maximal cone containing the point
};

/// A complete simplicial fan: rays, maximal cones (index sets of size d)
/// and the cached inverse of each cone's ray matrix. Immutable after
/// construction; all member functions are const and thread-safe.
class Fan {
 public:
  int dim() const { return dim_; }
  int num_rays() const { return int(rays_.size()); }
  int num_cones() const { return int(cones_.size()); }
  const Vector& ray(int i) const { return rays_[i]; }
  const std::vector<Vector>& rays() const { return rays_; }
  const std::vector<int>& cone(int c) const { return cones_[c]; }
  const std::vector<std::vector<int>>& cones() const { return cones_; }
  const std::string& name() const { return name_; }

  /// Locate x in a maximal cone and return its coefficient vector.
  /// Membership tolerance 1e-9 (small negatives are clamped to 0);
  /// ties on shared faces break to the lowest cone index.
  CoefficientVector coords(const Vector& x) const;

  friend Fan build_fan(int dim, const std::vector<Vector>& rays,
                       const std::vector<std::vector<int>>& maximal_cones,
                       uint64_t seed, const std::string& name);

 private:
  Fan() = default;

  int dim_ = 0;
  std::vector<Vector> rays_;
  std::vector<std::vector<int>> cones_;
  std::vector<Matrix> cone_inverses_;
  std::string name_;
};

/// Build and validate a fan. Cone index sets are 0-based here; the JSON
/// file format uses 1-based indices. Validation is probabilistic: at least
/// 10 * 2^dim seeded random unit directions are checked for coverage
/// (completeness) and pairwise interior-disjointness.
/// Throws SingularCone, NotComplete or Overlapping.
Fan build_fan(int dim, const std::vector<Vector>& rays,
              const std::vector<std::vector<int>>& maximal_cones,
              uint64_t seed = 20240901, const std::string& name = "custom");

/// The kite fan: rays +-e_i (ordered e_1, -e_1, e_2, -e_2, ...) and the
/// 2^d orthants as maximal cones.
Fan kite_fan(int d);

/// The Coxeter fan of type B: rays {0,+-1}^d \ {0}, cones indexed by
/// signed permutations. For d=2 the ray order is angular starting at
/// (1,0). Throws SizeLimit for d > max_dim.
Fan type_b_fan(int d, int max_dim = 6);

/// Build a complete 2-D fan from >= 3 pairwise non-parallel rays by
/// sorting them by angle and taking consecutive pairs as maximal cones.
/// Throws DuplicateDirection.
Fan fan_2d_from_rays(const std::vector<Vector>& rays);

/// JSON fan file: { "dim": d, "rays": [[..],..], "cones": [[1-based],..] }.
Fan read_fan_json(const std::string& path);
void write_fan_json(const Fan& fan, const std::string& path);

/// Resolve "kite:d", "typeb:d", "rays2d:<path>" or a JSON file path.
Fan fan_by_name(const std::string& spec);

}  // namespace starfan

#endif

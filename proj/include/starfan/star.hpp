#ifndef STARFAN_STAR_HPP
#define STARFAN_STAR_HPP

#include <vector>

#include "starfan/fan.hpp"

namespace starfan {

/// Entries at or below this floor denote a star vertex at infinity.
constexpr double kDegeneracyFloor = 1e-12;

/// A strictly positive parameter vector defining the star Star(a) and its
/// classifier. Entries at the degeneracy floor are reported, not clamped.
struct ParamVector {
  Vector a;

  ParamVector() = default;
  explicit ParamVector(Vector values);

  int size() const { return int(a.size()); }
  std::vector<int> degenerate_indices() const;
};

/// A star with a translated center.
struct TranslatedStar {
  ParamVector params;
  Vector t;
};

/// f(x) = <coords(x), a>: piecewise linear in x, linear in a.
double evaluate(const Fan& fan, const ParamVector& a, const Vector& x);

/// 0 iff evaluate(x) <= 1 (the closed star), 1 otherwise.
int classify(const Fan& fan, const ParamVector& a, const Vector& x);

/// Classify against the star translated to center t.
int classify_translated(const Fan& fan, const TranslatedStar& s, const Vector& x);

/// Boundary vertices v_i / a_i of Star(a). Throws DegenerateRay if some
/// a_i is at the floor (vertex at infinity).
std::vector<Vector> star_vertices(const Fan& fan, const ParamVector& a);

/// The VC lower-bound construction: a_i = 1 -/+ eps realizes any labeling
/// of the generators exactly. Requires 0 < eps < 1.
ParamVector shatter_params(const Fan& fan, const std::vector<int>& labels, double eps = 0.5);

/// Whether translation t keeps x inside the translated star; equivalent to
/// t being a member of -Star(a) + x.
bool translation_membership(const Fan& fan, const ParamVector& a, const Vector& x,
                            const Vector& t);

}  // namespace starfan

#endif

#include "starfan/star.hpp"

#include <stdexcept>

namespace starfan {

ParamVector::ParamVector(Vector values) : a(std::move(values)) {
  for (int i = 0; i < a.size(); ++i)
    if (!(a[i] > 0.0))
      throw std::invalid_argument("parameter a_" + std::to_string(i + 1) +
                                  " must be strictly positive");
}

std::vector<int> ParamVector::degenerate_indices() const {
  std::vector<int> out;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] <= kDegeneracyFloor) out.push_back(i);
  return out;
}

double evaluate(const Fan& fan, const ParamVector& a, const Vector& x) {
  if (a.size() != fan.num_rays())
    throw Error(Errc::DimensionError, "parameter vector length does not match ray count");
  const CoefficientVector cv = fan.coords(x);
  double f = 0.0;
  for (int i : cv.support) f += cv.entries[i] * a.a[i];
  return f;
}

int classify(const Fan& fan, const ParamVector& a, const Vector& x) {
  return evaluate(fan, a, x) <= 1.0 ? 0 : 1;
}

int classify_translated(const Fan& fan, const TranslatedStar& s, const Vector& x) {
  return classify(fan, s.params, x - s.t);
}

std::vector<Vector> star_vertices(const Fan& fan, const ParamVector& a) {
  if (a.size() != fan.num_rays())
    throw Error(Errc::DimensionError, "parameter vector length does not match ray count");
  std::vector<Vector> vertices;
  for (int i = 0; i < fan.num_rays(); ++i) {
    if (a.a[i] <= kDegeneracyFloor)
      throw Error(Errc::DegenerateRay,
                  "a_" + std::to_string(i + 1) + " is at the degeneracy floor");
    vertices.push_back(fan.ray(i) / a.a[i]);
  }
  return vertices;
}

ParamVector shatter_params(const Fan& fan, const std::vector<int>& labels, double eps) {
  if (int(labels.size()) != fan.num_rays())
    throw Error(Errc::DimensionError, "need one label per generator");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0, 1)");
  Vector a(fan.num_rays());
  for (int i = 0; i < fan.num_rays(); ++i) a[i] = labels[i] == 0 ? 1.0 - eps : 1.0 + eps;
  return ParamVector(a);
}

bool translation_membership(const Fan& fan, const ParamVector& a, const Vector& x,
                            const Vector& t) {
  return evaluate(fan, a, x - t) <= 1.0;
}

}  // namespace starfan

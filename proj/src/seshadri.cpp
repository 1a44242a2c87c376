#include "toricwidth/seshadri.hpp"

#include <algorithm>

#include "toricwidth/error.hpp"
#include "toricwidth/relations.hpp"

namespace toric {

std::string_view seshadri_source_name(SeshadriSource source) {
  switch (source) {
    case SeshadriSource::Gamma: return "gamma";
    case SeshadriSource::MinimalCurveList: return "minimal_curve_list";
  }
  return "unknown";
}

SeshadriBound seshadri_bound_toric(const Fan& fan, const KaehlerClass& kappa) {
  if (kappa.size() != fan.ray_count()) throw ToricError(ErrorCode::ShapeMismatch, "kappa length mismatch");
  if (!kappa.nonnegative()) throw ToricError(ErrorCode::NegativeKappa, "kappa has a negative entry");
  if (!is_ample(fan, kappa)) throw ToricError(ErrorCode::NotAmple, "the class is not ample");
  return {gamma(fan, kappa).value, SeshadriSource::Gamma,
          "upper bound at every point x; the line bundle is assumed very ample (ample on a smooth toric variety)"};
}

SeshadriBound seshadri_bound_minimal_curves(const std::vector<Rational>& degrees) {
  if (degrees.empty()) throw ToricError(ErrorCode::NoCurves, "no minimal curve degrees given");
  for (const auto& d : degrees)
    if (d <= 0) throw ToricError(ErrorCode::InvalidDegree, "curve degree " + to_string(d) + " is not positive");
  return {*std::min_element(degrees.begin(), degrees.end()), SeshadriSource::MinimalCurveList,
          "upper bound at every point x; minimum of L.C over the supplied minimal curves"};
}

}  // namespace toric

#pragma once

#include <string>
#include <vector>

#include "toricwidth/divisor.hpp"
#include "toricwidth/fan.hpp"

namespace toric {

enum class SeshadriSource { Gamma, MinimalCurveList };

struct SeshadriBound {
  Rational upper;
  SeshadriSource source;
  std::string caveat;
};

std::string_view seshadri_source_name(SeshadriSource source);

/// eps(X, L, x) <= gamma(X, omega_L) at every point x. Ampleness stands in for
/// very ampleness, which agree on smooth complete toric varieties.
/// Throws NegativeKappa, NotAmple.
SeshadriBound seshadri_bound_toric(const Fan& fan, const KaehlerClass& kappa);

/// Minimum of L . C over a list of minimal curve degrees.
/// Throws NoCurves, InvalidDegree.
SeshadriBound seshadri_bound_minimal_curves(const std::vector<Rational>& degrees);

}  // namespace toric

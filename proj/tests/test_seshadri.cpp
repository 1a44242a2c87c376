#include <doctest.h>

#include <functional>

#include "support/test_fans.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/primcoll.hpp"
#include "toricwidth/seshadri.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ToricError& e) {
    return e.code();
  }
  FAIL("expected a ToricError");
  return ErrorCode::InternalContradiction;
}

}  // namespace

TEST_CASE("toric Seshadri bounds") {
  CHECK(seshadri_bound_toric(h2(), kappa_of({0, 0, 1, 1})).upper == 1);
  CHECK(seshadri_bound_toric(p2(), kappa_of({0, 0, 1})).upper == 1);
  const SeshadriBound b = seshadri_bound_toric(p2(), kappa_of({0, 0, 2}));
  CHECK(b.upper == 2);
  CHECK(b.source == SeshadriSource::Gamma);
  CHECK_FALSE(b.caveat.empty());
  CHECK(code_of([] { seshadri_bound_toric(h2(), kappa_of({0, 0, 1, 0})); }) == ErrorCode::NotAmple);
}

TEST_CASE("minimal curve list bounds") {
  CHECK(seshadri_bound_minimal_curves({2, 3}).upper == 2);
  CHECK(seshadri_bound_minimal_curves({5}).upper == 5);
  CHECK(seshadri_bound_minimal_curves({5}).source == SeshadriSource::MinimalCurveList);
  CHECK(code_of([] { seshadri_bound_minimal_curves({}); }) == ErrorCode::NoCurves);
  CHECK(code_of([] { seshadri_bound_minimal_curves({1, 0}); }) == ErrorCode::InvalidDegree);
}

TEST_CASE("gamma bound is at most the minimal curve bound and scales") {
  for (const auto& e : corpus()) {
    std::vector<Rational> degrees;
    for (const auto& fam : minimal_curve_families(e.fan)) {
      Rational area = 0;
      for (auto i : fam.collection.indices) area += e.kappa.kappa[i];
      degrees.push_back(area);
    }
    const Rational toric = seshadri_bound_toric(e.fan, e.kappa).upper;
    CHECK(toric <= seshadri_bound_minimal_curves(degrees).upper);
    for (const Rational c : {Rational(2), Rational(1, 2), Rational(3, 7)})
      CHECK(seshadri_bound_toric(e.fan, e.kappa.scaled(c)).upper == c * toric);
  }
}

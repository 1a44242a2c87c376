#include <doctest.h>

#include <random>

#include "support/test_fans.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/fan.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const ToricError& e) {
    return e.code();
  }
  FAIL("expected a ToricError");
  return ErrorCode::InternalContradiction;
}

}  // namespace

TEST_CASE("validate the projective plane and H2") {
  for (const Fan& f : {p2(), h2()}) {
    const FanReport r = validate_fan(f);
    CHECK(r.simplicial);
    CHECK(r.smooth);
    CHECK(r.complete);
    CHECK(r.pure);
  }
}

TEST_CASE("a single quadrant is smooth but not complete") {
  const FanReport r = validate_fan(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}));
  CHECK(r.smooth);
  CHECK_FALSE(r.complete);
}

TEST_CASE("singular and overlapping fans") {
  const FanReport singular = validate_fan(make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(singular.simplicial);
  CHECK(singular.complete);
  CHECK_FALSE(singular.smooth);

  // Facet-paired and connected, but {0,1} and {1,2} sit on the same side of ray 1.
  const FanReport overlapping = validate_fan(make_fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(overlapping.complete);

  // Cones of dimension one in the plane: not pure.
  const FanReport lower = validate_fan(make_fan(2, {{1, 0}, {-1, 0}}, {{0}, {1}}));
  CHECK_FALSE(lower.pure);
  CHECK_FALSE(lower.complete);
}

TEST_CASE("the complete line") {
  const FanReport r = validate_fan(make_fan(1, {{1}, {-1}}, {{0}, {1}}));
  CHECK(r.smooth);
  CHECK(r.complete);
}

TEST_CASE("fan construction errors") {
  CHECK(code_of([] { make_fan(2, {{2, 4}, {0, 1}}, {{0, 1}}); }) == ErrorCode::RayNotPrimitive);
  CHECK(code_of([] { make_fan(2, {{0, 0}, {0, 1}}, {{0, 1}}); }) == ErrorCode::RayNotPrimitive);
  CHECK(code_of([] { make_fan(2, {{1, 0}, {1, 0}}, {{0, 1}}); }) == ErrorCode::DuplicateRay);
  CHECK(code_of([] { make_fan(2, {{1, 0}, {0, 1}}, {{0, 2}}); }) == ErrorCode::InvalidCone);
  CHECK(code_of([] { make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}, {1}}); }) == ErrorCode::InvalidCone);
  CHECK(code_of([] { make_fan(2, {{1, 0}, {0, 1}}, {{0, 0}}); }) == ErrorCode::InvalidCone);
}

TEST_CASE("validate is invariant under relabeling and lattice change") {
  std::mt19937_64 rng(3);
  const Fan singular = make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  const Fan quadrant = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
  for (const Fan& f : {p2(), h2(), blowup_p2(), p3(), p1xp2(), singular, quadrant}) {
    const FanReport base = validate_fan(f);
    for (int t = 0; t < 10; ++t) {
      KaehlerClass dummy{RatVector(f.ray_count())};
      CHECK(validate_fan(permute_rays(f, dummy, rng).fan) == base);
      CHECK(validate_fan(transform_fan(f, random_unimodular(f.dim(), rng))) == base);
    }
  }
}

TEST_CASE("locate_cone on H2 and P2") {
  const Fan h = h2();
  // u2 + u4 = 0
  const auto zero = locate_cone(h, to_int_vector({0, 0}));
  CHECK(zero.cone.empty());
  CHECK(zero.coefficients.empty());
  // u1 + u3 = 2 u2
  const auto ray = locate_cone(h, to_int_vector({0, 2}));
  CHECK(ray.cone == Cone{1});
  CHECK(ray.coefficients == std::vector<Rational>{2});

  const auto c = locate_cone(p2(), to_int_vector({2, 1}));
  CHECK(c.cone == Cone{0, 1});
  CHECK(c.coefficients == std::vector<Rational>{2, 1});
}

TEST_CASE("locate_cone reconstructs v and is lattice-equivariant") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (const Fan& f : {p2(), h2(), blowup_p2(), p3(), p1xp1xp1()}) {
    const IntMatrix g = random_unimodular(f.dim(), rng);
    const Fan moved = transform_fan(f, g);
    for (int t = 0; t < 25; ++t) {
      IntVector v(f.dim());
      for (auto& x : v) x = d(rng);
      const auto loc = locate_cone(f, v);
      RatVector sum(f.dim());
      for (std::size_t i = 0; i < loc.cone.size(); ++i) {
        CHECK(loc.coefficients[i] > 0);
        for (std::size_t k = 0; k < f.dim(); ++k) sum[k] += loc.coefficients[i] * f.ray(loc.cone[i])[k];
      }
      CHECK(sum == RatVector(v.begin(), v.end()));
      const auto loc2 = locate_cone(moved, g * v);
      CHECK(loc2.cone == loc.cone);
      CHECK(loc2.coefficients == loc.coefficients);
    }
  }
}

TEST_CASE("locate_cone outside the support") {
  const Fan quadrant = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
  CHECK(code_of([&] { locate_cone(quadrant, to_int_vector({-1, 0})); }) == ErrorCode::OutsideSupport);
}

TEST_CASE("walls") {
  const auto hw = walls(h2());
  CHECK(hw.size() == 4);
  for (const auto& w : hw) {
    CHECK(w.facet.size() == 1);
    CHECK(w.left != w.right);
  }
  CHECK(walls(p2()).size() == 3);
  CHECK(walls(p3()).size() == 6);
  CHECK(code_of([] { walls(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}})); }) == ErrorCode::NotComplete);
}

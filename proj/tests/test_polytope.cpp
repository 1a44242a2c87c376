#include <doctest.h>

#include <functional>
#include <random>

#include "support/test_fans.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/polytope.hpp"
#include "toricwidth/relations.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<RatVector> points(std::vector<std::vector<long long>> pts) {
  std::vector<RatVector> out;
  for (const auto& p : pts) out.push_back(to_rat_vector(p));
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ToricError& e) {
    return e.code();
  }
  FAIL("expected a ToricError");
  return ErrorCode::InternalContradiction;
}

IntVector random_primitive(std::size_t n, std::mt19937_64& rng, int range = 7) {
  std::uniform_int_distribution<int> d(-range, range);
  for (;;) {
    IntVector u(n);
    for (auto& x : u) x = d(rng);
    if (content(u) == 1) return u;
  }
}

}  // namespace

TEST_CASE("momentum polytopes and their vertices") {
  CHECK(vertices(momentum_polytope(p2(), kappa_of({0, 0, 1}))) == points({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(vertices(momentum_polytope(h2(), kappa_of({0, 0, 1, 1}))) == points({{-1, 0}, {-1, 1}, {0, 0}, {2, 1}}));
  for (const auto& e : corpus()) {
    const auto v = vertices(momentum_polytope(e.fan, KaehlerClass{RatVector(e.fan.ray_count())}));
    CHECK(v == std::vector<RatVector>{RatVector(e.fan.dim())});
  }
}

TEST_CASE("every vertex is feasible and cut out by dim independent facets") {
  for (const auto& e : corpus()) {
    const LatticePolytope p = momentum_polytope(e.fan, e.kappa);
    CHECK(p.bounded());
    for (const auto& v : vertices(p)) {
      CHECK(p.contains(v));
      std::vector<IntVector> active;
      for (const auto& h : p.halfspaces())
        if (dot(v, h.normal) == h.offset) active.push_back(h.normal);
      CHECK(rank(IntMatrix::from_rows(active, e.fan.dim())) == e.fan.dim());
    }
  }
}

TEST_CASE("polytope errors") {
  const Fan quadrant = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
  const LatticePolytope cone = momentum_polytope(quadrant, kappa_of({1, 1}));
  CHECK_FALSE(cone.bounded());
  CHECK(code_of([&] { vertices(cone); }) == ErrorCode::Unbounded);
  CHECK(code_of([] { momentum_polytope(p2(), kappa_of({-1, 0, 0})); }) == ErrorCode::EmptyPolytope);
  const LatticePolytope tri = momentum_polytope(p2(), kappa_of({0, 0, 1}));
  CHECK(code_of([&] { width_along(tri, to_int_vector({0, 0})); }) == ErrorCode::ZeroDirection);
}

TEST_CASE("directional widths") {
  const LatticePolytope h = momentum_polytope(h2(), kappa_of({0, 0, 1, 1}));
  CHECK(width_along(h, to_int_vector({0, 1})) == 1);
  CHECK(width_along(h, to_int_vector({1, 0})) == 3);
  const LatticePolytope pt = momentum_polytope(p2(), kappa_of({0, 0, 0}));
  CHECK(width_along(pt, to_int_vector({3, -1})) == 0);
}

TEST_CASE("lattice widths") {
  const LatticeWidth h = lattice_width(momentum_polytope(h2(), kappa_of({0, 0, 1, 1})));
  CHECK(h.value == 1);
  CHECK(h.direction == to_int_vector({0, 1}));
  CHECK(lattice_width(momentum_polytope(p2(), kappa_of({0, 0, 1}))).value == 1);
  CHECK(lattice_width(momentum_polytope(p1xp1(), kappa_of({0, 1, 0, 1}))).value == 1);

  const LatticeWidth certified = lattice_width(momentum_polytope(h2(), kappa_of({0, 0, 1, 1})), Integer(3), Rational(1));
  CHECK(certified.certified);
  CHECK(certified.search_bound == 3);
  // A degenerate segment has width 0 along its normal.
  CHECK(lattice_width(momentum_polytope(p1xp1(), kappa_of({1, 0, 0, 0}))).value == 0);
}

TEST_CASE("too small a search bound is doubled until the certificate is met") {
  // Thin skew strip: width 1 along (1, -3) only.
  const Fan f = transform_fan(p1xp1(), IntMatrix::from_rows({{1, 0}, {3, 1}}));
  const KaehlerClass k = kappa_of({0, 1, 0, 20});
  const LatticePolytope p = momentum_polytope(f, k);
  const Rational g = gamma(f, k).value;
  CHECK(g == 1);
  CHECK(lattice_width(p, Integer(1)).value > 1);
  const LatticeWidth w = lattice_width(p, Integer(1), g);
  CHECK(w.value == 1);
  CHECK(w.certified);
  CHECK(w.search_bound > 1);
}

TEST_CASE("default width is the minimum over the reported radius") {
  std::mt19937_64 rng(63);
  std::vector<std::pair<Fan, KaehlerClass>> cases;
  cases.emplace_back(transform_fan(p1xp1(), IntMatrix::from_rows({{1, 0}, {3, 1}})), kappa_of({0, 1, 0, 20}));
  for (const auto& e : corpus())
    for (int t = 0; t < 3; ++t) cases.emplace_back(transform_fan(e.fan, random_unimodular(e.fan.dim(), rng)), e.kappa);
  for (const auto& [fan, kappa] : cases) {
    const LatticePolytope p = momentum_polytope(fan, kappa);
    const LatticeWidth exact = lattice_width(p);
    CHECK(exact.value == gamma(fan, kappa).value);
    if (exact.search_bound > 12) continue;  // keep the direct box small
    const LatticeWidth box = lattice_width(p, exact.search_bound);
    CHECK(box.value == exact.value);
    CHECK(box.direction == exact.direction);
  }
}

TEST_CASE("width symmetries") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> d(-5, 5);
  for (const auto& e : corpus()) {
    const LatticePolytope p = momentum_polytope(e.fan, e.kappa);
    // translate by m: offsets shift by <m, eta>
    RatVector m(e.fan.dim());
    for (auto& x : m) x = Rational(d(rng), 2);
    std::vector<Halfspace> shifted;
    for (const auto& h : p.halfspaces()) shifted.push_back({h.normal, h.offset + dot(m, h.normal)});
    const LatticePolytope q(e.fan.dim(), shifted);
    for (int t = 0; t < 20; ++t) {
      const IntVector u = random_primitive(e.fan.dim(), rng);
      IntVector neg = u, triple = u;
      for (auto& x : neg) x = -x;
      for (auto& x : triple) x *= 3;
      const Rational w = width_along(p, u);
      CHECK(width_along(p, neg) == w);
      CHECK(width_along(p, triple) == 3 * w);
      CHECK(width_along(q, u) == w);
    }
  }
}

TEST_CASE("lattice width equals gamma on random smooth fans") {
  std::mt19937_64 rng(67);
  std::vector<CorpusEntry> fans = corpus();
  for (int t = 0; t < 30; ++t) fans.push_back(random_surface(rng, 4));
  for (int t = 0; t < 8; ++t) fans.push_back(random_threefold(rng, 2));
  for (const auto& e : fans) {
    CAPTURE(e.name);
    const Rational g = gamma(e.fan, e.kappa).value;
    const LatticePolytope p = momentum_polytope(e.fan, e.kappa);
    const LatticeWidth w = lattice_width(p, std::nullopt, g);
    CHECK(w.value == g);
    CHECK(w.certified);
    for (int t = 0; t < 20; ++t) CHECK(g <= width_along(p, random_primitive(e.fan.dim(), rng)));
  }
}

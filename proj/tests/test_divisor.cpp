#include <doctest.h>

#include <random>

#include "support/test_fans.hpp"
#include "toricwidth/divisor.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/relations.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

Relation rel(std::vector<long long> a) { return Relation(to_int_vector(a)); }

const Wall& wall_with_facet(const std::vector<Wall>& ws, const Cone& facet) {
  for (const auto& w : ws)
    if (w.facet == facet) return w;
  FAIL("wall not found");
  return ws.front();
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("class groups") {
  const auto p = class_group(p2());
  CHECK(p.free_rank == 1);
  CHECK(p.torsion.empty());

  const auto h = class_group(h2());
  CHECK(h.free_rank == 2);
  CHECK(h.torsion.empty());
  // Every principal divisor sum <m, eta_rho> D_rho maps to zero.
  const IntMatrix alpha = h2().ray_matrix().transpose();
  CHECK(h.presentation * alpha == IntMatrix(2, 2));

  const auto empty = class_group(Fan(2, {}, {}));
  CHECK(empty.free_rank == 0);
  CHECK(empty.torsion.empty());

  // Rays spanning an index-2 sublattice give Z/2 torsion.
  const auto t = class_group(make_fan(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(t.free_rank == 2);
  CHECK(t.torsion == std::vector<Integer>{2});
}

TEST_CASE("intersection pairing") {
  const KaehlerClass k = kappa_of({0, 0, 2, 3});  // a = 2, b = 3
  CHECK(intersect(k, rel({0, 1, 0, 1})) == 3);
  CHECK(intersect(k, rel({1, 0, 1, 2})) == 2 + 2 * 3);
  CHECK(intersect(k, rel({0, 0, 0, 0})) == 0);
  CHECK_THROWS_AS(intersect(k, rel({1, 1, 1})), ToricError);
}

TEST_CASE("intersect is bilinear") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 50; ++t) {
    KaehlerClass k1, k2;
    IntVector r1(5), r2(5);
    for (int i = 0; i < 5; ++i) {
      k1.kappa.push_back(random_rational(rng));
      k2.kappa.push_back(random_rational(rng));
      r1[i] = d(rng);
      r2[i] = d(rng);
    }
    KaehlerClass sum = k1;
    IntVector rsum = r1;
    for (int i = 0; i < 5; ++i) {
      sum.kappa[i] += k2.kappa[i];
      rsum[i] += r2[i];
    }
    const Rational c = random_rational(rng);
    CHECK(intersect(sum, Relation(r1)) == intersect(k1, Relation(r1)) + intersect(k2, Relation(r1)));
    CHECK(intersect(k1, Relation(rsum)) == intersect(k1, Relation(r1)) + intersect(k1, Relation(r2)));
    CHECK(intersect(k1.scaled(c), Relation(r1)) == c * intersect(k1, Relation(r1)));
  }
}

TEST_CASE("wall curve relations") {
  const Fan h = h2();
  const auto hw = walls(h);
  CHECK(wall_curve_relation(h, wall_with_facet(hw, {3})) == rel({1, 0, 1, 2}));
  CHECK(wall_curve_relation(h, wall_with_facet(hw, {1})) == rel({1, -2, 1, 0}));
  const Fan p = p2();
  CHECK(wall_curve_relation(p, wall_with_facet(walls(p), {0})) == rel({1, 1, 1}));

  for (const auto& e : corpus())
    for (const auto& w : walls(e.fan)) CHECK_NOTHROW(check_relation(e.fan, wall_curve_relation(e.fan, w)));
}

TEST_CASE("ampleness") {
  CHECK(is_ample(h2(), kappa_of({0, 0, 1, 1})));
  CHECK_FALSE(is_ample(h2(), kappa_of({0, 0, 1, 0})));
  CHECK(is_ample(p2(), kappa_of({0, 0, 1})));
  CHECK_FALSE(is_ample(p2(), kappa_of({0, 0, 0})));
  for (const auto& e : corpus()) CHECK(is_ample(e.fan, e.kappa));
}

TEST_CASE("ampleness is invariant under relabeling and lattice change") {
  std::mt19937_64 rng(23);
  for (const auto& e : corpus()) {
    const std::vector<KaehlerClass> classes = {e.kappa, KaehlerClass{RatVector(e.fan.ray_count(), 1)}};
    for (const auto& k : classes) {
      const bool base = is_ample(e.fan, k);
      for (int t = 0; t < 5; ++t) {
        const auto rl = permute_rays(e.fan, k, rng);
        CHECK(is_ample(rl.fan, rl.kappa) == base);
        CHECK(is_ample(transform_fan(e.fan, random_unimodular(e.fan.dim(), rng)), k) == base);
      }
    }
  }
}

TEST_CASE("normalize_kappa") {
  CHECK(normalize_kappa(h2(), kappa_of({0, 0, 1, 1})) == kappa_of({0, 0, 1, 1}));
  CHECK(normalize_kappa(p2(), kappa_of({-1, 0, 1})) == kappa_of({0, 0, 0}));
  CHECK(normalizing_shift(p2(), kappa_of({-1, 0, 1})) == RatVector{1, 0});
  try {
    normalize_kappa(p2(), kappa_of({-1, 0, 0}));
    FAIL("expected NotRepresentable");
  } catch (const ToricError& e) {
    CHECK(e.code() == ErrorCode::NotRepresentable);
  }
}

TEST_CASE("normalization preserves the class and the pairing") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> d(-4, 4);
  for (const auto& e : corpus()) {
    const auto rels = minimal_nonneg_relations(e.fan);
    for (int t = 0; t < 10; ++t) {
      // kappa + <m, eta> for a random rational m: same class, often negative.
      KaehlerClass k = e.kappa;
      RatVector m(e.fan.dim());
      for (auto& x : m) x = Rational(d(rng), 3);
      for (std::size_t r = 0; r < e.fan.ray_count(); ++r) k.kappa[r] += dot(m, e.fan.ray(r));
      const KaehlerClass n = normalize_kappa(e.fan, k);
      CHECK(n.nonnegative());
      for (const auto& r : rels) CHECK(intersect(n, r) == intersect(k, r));
      for (const auto& w : walls(e.fan)) {
        const Relation wr = wall_curve_relation(e.fan, w);
        CHECK(intersect(n, wr) == intersect(e.kappa, wr));
      }
    }
  }
}

TEST_CASE("principal divisors pair to zero with every relation") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const auto& e : corpus()) {
    std::vector<Relation> rels = minimal_nonneg_relations(e.fan);
    for (const auto& w : walls(e.fan)) rels.push_back(wall_curve_relation(e.fan, w));
    for (int t = 0; t < 20; ++t) {
      IntVector m(e.fan.dim());
      for (auto& x : m) x = d(rng);
      for (const auto& r : rels) {
        Integer s = 0;
        for (std::size_t rho = 0; rho < r.size(); ++rho) s += dot(m, e.fan.ray(rho)) * r[rho];
        CHECK(s == 0);
      }
    }
  }
}

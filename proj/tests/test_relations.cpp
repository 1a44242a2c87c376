#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "support/test_fans.hpp"
#include "toricwidth/error.hpp"
#include "toricwidth/primcoll.hpp"
#include "toricwidth/relations.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<SmallVec> as_small(const std::vector<Relation>& rels) {
  std::vector<SmallVec> out;
  for (const auto& r : rels) out.push_back(to_small(r.coefficients()));
  return out;
}

std::int64_t max_entry(const std::vector<Relation>& rels) {
  std::int64_t m = 0;
  for (const auto& r : rels)
    for (const auto& x : r.coefficients()) m = std::max(m, x.convert_to<std::int64_t>());
  return m;
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

}  // namespace

TEST_CASE("minimal nonnegative relations of small fans") {
  CHECK(as_small(minimal_nonneg_relations(h2())) == std::vector<SmallVec>{{0, 1, 0, 1}, {1, 0, 1, 2}});
  CHECK(as_small(minimal_nonneg_relations(p2())) == std::vector<SmallVec>{{1, 1, 1}});
  CHECK(as_small(minimal_nonneg_relations(p1xp1())) == std::vector<SmallVec>{{0, 0, 1, 1}, {1, 1, 0, 0}});
}

TEST_CASE("minimal relations match brute force inside the box") {
  std::mt19937_64 rng(41);
  std::vector<CorpusEntry> fans = corpus();
  for (int t = 0; t < 15; ++t) fans.push_back(random_surface(rng));
  for (const auto& e : fans) {
    CAPTURE(e.name);
    const auto minimal = as_small(minimal_nonneg_relations(e.fan));
    const int bound = e.fan.ray_count() > 7 ? 2 : 4;
    const auto box = brute_force_relations(e.fan, bound);
    std::vector<SmallVec> in_box;
    for (const auto& m : minimal)
      if (*std::max_element(m.begin(), m.end()) <= bound) in_box.push_back(m);
    CHECK(componentwise_minimal(box) == in_box);
    // Domination: every relation in the box sits above a minimal one.
    for (const auto& a : box)
      CHECK(std::any_of(minimal.begin(), minimal.end(), [&](const SmallVec& m) { return small_dominates(a, m); }));
  }
}

TEST_CASE("gamma examples") {
  const GammaResult h = gamma(h2(), kappa_of({0, 0, 1, 1}));
  CHECK(h.value == 1);
  CHECK(h.minimizer == Relation(to_int_vector({0, 1, 0, 1})));
  CHECK(h.attained_by_binary);

  const GammaResult p = gamma(p2(), kappa_of({0, 0, 1}));
  CHECK(p.value == 1);
  CHECK(p.minimizer == Relation(to_int_vector({1, 1, 1})));

  for (const auto& e : corpus()) {
    const GammaResult g1 = gamma(e.fan, e.kappa);
    const GammaResult g2 = gamma(e.fan, e.kappa.scaled(2));
    CHECK(g2.value == 2 * g1.value);
    CHECK(g2.minimizer == g1.minimizer);
  }
}

TEST_CASE("gamma ties go to the lexicographically smallest relation") {
  // P1 x P1 with equal sides: both rulings have area 1.
  const GammaResult g = gamma(p1xp1(), kappa_of({0, 1, 0, 1}));
  CHECK(g.value == 1);
  CHECK(g.minimizer == Relation(to_int_vector({0, 0, 1, 1})));
}

TEST_CASE("gamma errors") {
  CHECK(code_of([] { gamma(h2(), kappa_of({-1, 0, 1, 1})); }) == ErrorCode::NegativeKappa);
  CHECK(code_of([] { gamma(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}), kappa_of({1, 1})); }) == ErrorCode::NoRelation);
  CHECK(code_of([] { lambda_bound(h2(), kappa_of({0, 0, -1, 1})); }) == ErrorCode::NegativeKappa);
}

TEST_CASE("lambda examples") {
  CHECK(lambda_bound(h2(), kappa_of({0, 0, 1, 1})) == 1);
  CHECK(lambda_bound(p2(), kappa_of({0, 0, 1})) == 1);
  CHECK(lambda_bound(p1xp1(), kappa_of({0, 1, 0, 2})) == 2);
  const auto beyond = relations_beyond_lambda_cap(h2());
  REQUIRE(beyond.size() == 1);
  CHECK(beyond.front() == Relation(to_int_vector({1, 0, 1, 2})));
  CHECK(relations_beyond_lambda_cap(p2()).empty());
}

TEST_CASE("brute-force gamma examples") {
  CHECK(gamma_by_brute_force(h2(), kappa_of({0, 0, 1, 1}), 4) == 1);
  CHECK(gamma_by_brute_force(p2(), kappa_of({0, 0, 1}), 2) == 1);
  CHECK(gamma_by_brute_force(p2(), kappa_of({0, 0, 0}), 2) == 0);
}

TEST_CASE("gamma agrees with brute force on corpus and random fans") {
  std::mt19937_64 rng(43);
  std::vector<CorpusEntry> fans = corpus();
  for (int t = 0; t < 10; ++t) fans.push_back(random_surface(rng));
  for (int t = 0; t < 4; ++t) fans.push_back(random_threefold(rng, 1));
  for (const auto& e : fans) {
    CAPTURE(e.name);
    const auto minimal = minimal_nonneg_relations(e.fan);
    const auto bound = static_cast<unsigned>(1 + max_entry(minimal));
    if (std::pow(bound + 1.0, static_cast<double>(e.fan.ray_count())) > 3e6) continue;
    CHECK(gamma(e.fan, e.kappa).value == gamma_by_brute_force(e.fan, e.kappa, bound));
  }
}

TEST_CASE("gamma is invariant under relabeling and lattice change") {
  std::mt19937_64 rng(47);
  for (const auto& e : corpus()) {
    const GammaResult base = gamma(e.fan, e.kappa);
    for (int t = 0; t < 5; ++t) {
      const auto rl = permute_rays(e.fan, e.kappa, rng);
      const GammaResult g = gamma(rl.fan, rl.kappa);
      CHECK(g.value == base.value);
      // the minimizer is a relation of the relabeled fan with the same area
      CHECK(intersect(rl.kappa, g.minimizer) == base.value);
      CHECK(gamma(transform_fan(e.fan, random_unimodular(e.fan.dim(), rng)), e.kappa).value == base.value);
    }
  }
}

TEST_CASE("gamma is bounded by lambda and by zero-sum primitive collections") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const Rational g = gamma(e.fan, e.kappa).value;
    CHECK(g <= lambda_bound(e.fan, e.kappa));
    for (const auto& fam : minimal_curve_families(e.fan)) {
      IntVector a(e.fan.ray_count());
      for (auto i : fam.collection.indices) a[i] = 1;
      const Relation r(a);
      CHECK_NOTHROW(check_relation(e.fan, r));
      CHECK(g <= intersect(e.kappa, r));
    }
  }
}

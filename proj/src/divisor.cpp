#include "toricwidth/divisor.hpp"

#include <algorithm>

#include "toricwidth/error.hpp"
#include "toricwidth/polytope.hpp"

namespace toric {

bool KaehlerClass::nonnegative() const {
  return std::none_of(kappa.begin(), kappa.end(), [](const Rational& k) { return k < 0; });
}

KaehlerClass KaehlerClass::scaled(const Rational& c) const {
  KaehlerClass out = *this;
  for (auto& k : out.kappa) k *= c;
  return out;
}

ClassGroupDescription class_group(const Fan& fan) {
  ClassGroupDescription out;
  const std::size_t k = fan.ray_count();
  if (k == 0) {
    out.presentation = IntMatrix(0, 0);
    return out;
  }
  // alpha has the rays as rows: (alpha m)_rho = <m, eta_rho>.
  const IntMatrix alpha = fan.ray_matrix().transpose();
  const SNFDecomposition snf = smith_normal_form(alpha);
  const auto factors = snf.invariant_factors();

  // coker(alpha) = (+) Z/d_i (+) Z^{k - rank}; e_rho maps to U e_rho.
  std::vector<std::size_t> generator_rows;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] != 1) {
      out.torsion.push_back(factors[i]);
      generator_rows.push_back(i);
    }
  out.free_rank = k - factors.size();
  for (std::size_t i = factors.size(); i < k; ++i) generator_rows.push_back(i);

  out.presentation = IntMatrix(generator_rows.size(), k);
  for (std::size_t g = 0; g < generator_rows.size(); ++g)
    for (std::size_t rho = 0; rho < k; ++rho) {
      Integer value = snf.U(generator_rows[g], rho);
      if (g < out.torsion.size()) {
        const Integer& d = out.torsion[g];
        value %= d;
        if (value < 0) value += d;
      }
      out.presentation(g, rho) = value;
    }
  return out;
}

Rational intersect(const KaehlerClass& kappa, const Relation& rel) {
  if (kappa.size() != rel.size()) {
    throw ToricError(ErrorCode::ShapeMismatch, "kappa has " + std::to_string(kappa.size()) +
                                                   " entries but the relation has " +
                                                   std::to_string(rel.size()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < rel.size(); ++i) sum += kappa.kappa[i] * rel[i];
  return sum;
}

Relation wall_curve_relation(const Fan& fan, const Wall& wall) {
  auto opposite = [&](const Cone& cone) {
    for (RayIndex r : cone)
      if (!std::binary_search(wall.facet.begin(), wall.facet.end(), r)) return r;
    throw ToricError(ErrorCode::NotComplete, "wall neighbour does not extend the facet");
  };
  const RayIndex p = opposite(fan.max_cones()[wall.left]);
  const RayIndex q = opposite(fan.max_cones()[wall.right]);

  std::vector<IntVector> cols;
  for (RayIndex r : wall.facet) cols.push_back(fan.ray(r));
  RatVector rhs(fan.dim());
  for (std::size_t i = 0; i < fan.dim(); ++i) rhs[i] = -(fan.ray(p)[i] + fan.ray(q)[i]);
  const auto coeffs = solve_exact(IntMatrix::from_columns(cols, fan.dim()), rhs);
  if (!coeffs) throw ToricError(ErrorCode::NotSmoothCone, "wall rays do not balance the opposite rays");

  IntVector a(fan.ray_count());
  a[p] = 1;
  a[q] = 1;
  for (std::size_t i = 0; i < wall.facet.size(); ++i) {
    if (!is_integer((*coeffs)[i])) {
      throw ToricError(ErrorCode::NotSmoothCone, "wall relation has a non-integer coefficient");
    }
    a[wall.facet[i]] = boost::multiprecision::numerator((*coeffs)[i]);
  }
  return Relation(std::move(a));
}

bool is_ample(const Fan& fan, const KaehlerClass& kappa) {
  for (const Wall& w : walls(fan))
    if (intersect(kappa, wall_curve_relation(fan, w)) <= 0) return false;
  return true;
}

RatVector normalizing_shift(const Fan& fan, const KaehlerClass& kappa) {
  if (kappa.size() != fan.ray_count()) throw ToricError(ErrorCode::ShapeMismatch, "kappa length mismatch");
  if (kappa.nonnegative()) return RatVector(fan.dim());
  std::vector<Halfspace> halfspaces;
  for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) halfspaces.push_back({fan.ray(rho), -kappa.kappa[rho]});
  const auto verts = enumerate_vertices(fan.dim(), halfspaces);
  if (verts.empty()) {
    throw ToricError(ErrorCode::NotRepresentable, "no nonnegative representative: the momentum polytope is empty");
  }
  return verts.front();
}

KaehlerClass normalize_kappa(const Fan& fan, const KaehlerClass& kappa) {
  const RatVector m = normalizing_shift(fan, kappa);
  KaehlerClass out = kappa;
  for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) out.kappa[rho] += dot(m, fan.ray(rho));
  return out;
}

}  // namespace toric

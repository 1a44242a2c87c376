#pragma once

#include <vector>

#include "toricwidth/fan.hpp"
#include "toricwidth/lattice.hpp"
#include "toricwidth/relation.hpp"

namespace toric {

/// Coefficients kappa_rho of [omega] = sum kappa_rho [D_rho], one per ray.
struct KaehlerClass {
  RatVector kappa;

  std::size_t size() const { return kappa.size(); }
  bool nonnegative() const;
  KaehlerClass scaled(const Rational& c) const;
  bool operator==(const KaehlerClass&) const = default;
};

/// Cl(X) as the cokernel of M -> Z^{rays}, m -> (<m, eta_rho>).
struct ClassGroupDescription {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  /// Column rho holds the coordinates of [D_rho]: one row per torsion
  /// generator (reduced modulo its order), then one row per free generator.
  IntMatrix presentation;
};

ClassGroupDescription class_group(const Fan& fan);

/// D . R = sum kappa_rho a_rho. Throws ShapeMismatch.
Rational intersect(const KaehlerClass& kappa, const Relation& rel);

/// The class of the torus-invariant curve of a wall: +1 on the two rays
/// opposite the wall, the solving integers on the wall rays, 0 elsewhere.
Relation wall_curve_relation(const Fan& fan, const Wall& wall);

/// Toric Kleiman criterion: positive on every wall curve.
bool is_ample(const Fan& fan, const KaehlerClass& kappa);

/// A representative kappa + <m, eta> >= 0 of the same class. Returns kappa
/// unchanged when already nonnegative; otherwise m is the lexicographically
/// least vertex of {m : <m, eta_rho> >= -kappa_rho}. Throws NotRepresentable.
/// Requires rays spanning the lattice (true for complete fans).
KaehlerClass normalize_kappa(const Fan& fan, const KaehlerClass& kappa);

/// The shift m used by normalize_kappa (zero when none was needed).
RatVector normalizing_shift(const Fan& fan, const KaehlerClass& kappa);

}  // namespace toric

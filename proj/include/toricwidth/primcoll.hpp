#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toricwidth/divisor.hpp"
#include "toricwidth/fan.hpp"
#include "toricwidth/relation.hpp"

namespace toric {

/// A minimal set of rays that is not a face: dropping any one ray gives a face.
struct PrimitiveCollection {
  Cone indices;
  bool operator==(const PrimitiveCollection&) const = default;
  auto operator<=>(const PrimitiveCollection&) const = default;
};

/// sum_{x in collection} eta_x = sum_i b_i y_i over the generators y_i of sigma.
struct PrimitiveRelation {
  PrimitiveCollection collection;
  Cone sigma;                // empty for the zero cone
  std::vector<Integer> b;    // positive, aligned with sigma
  Integer degree;            // |collection| - sum b_i

  /// As a signed relation vector over all rays: +1 on the collection, -b_i on sigma.
  Relation as_relation(std::size_t ray_count) const;
};

struct CurveFamily {
  PrimitiveCollection collection;
  Integer degree;  // equals the collection size
};

/// Exponent of (t - marker) in one affine coordinate.
struct MarkerExponent {
  Rational marker;
  Integer exponent;
};

/// Combinatorial content of the rational curve
///   t -> prod_rho lambda_{eta_rho}(t - c_rho)^{a_rho}
/// attached to a nonnegative relation: which parameter c_rho meets D_rho, the
/// exponent of (t - c_rho) in each torus coordinate, and the symplectic area.
struct CurveCertificate {
  Relation relation;
  std::map<RayIndex, Rational> markers;
  std::vector<std::vector<MarkerExponent>> exponents;  // one list per coordinate
  std::map<RayIndex, Integer> intersection_numbers;    // D_rho . C read off the vanishing orders
  std::optional<Rational> symplectic_area;
};

/// Minimal non-faces, sorted lexicographically by index list.
std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);

/// Throws NotSmoothCone when a coefficient is not an integer.
PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& coll);

std::vector<PrimitiveRelation> primitive_relations(const Fan& fan);

/// Every primitive relation has positive degree.
bool is_fano(const Fan& fan);

/// Zero-sum primitive collections; these index the minimal rational curve
/// families. Throws InternalContradiction when there are none.
std::vector<CurveFamily> minimal_curve_families(const Fan& fan);

/// Builds and checks the curve certificate of `rel`. Markers default to
/// 0, 1, 2, ... over the rays with a_rho > 0 in index order; a caller-supplied
/// list must have one entry per such ray. Throws ZeroRelation,
/// DuplicateMarker, ShapeMismatch, NotARelation.
CurveCertificate free_curve_certificate(const Fan& fan, const Relation& rel,
                                        const std::optional<KaehlerClass>& kappa = std::nullopt,
                                        const std::optional<std::vector<Rational>>& markers = std::nullopt);

}  // namespace toric

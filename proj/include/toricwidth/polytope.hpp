#pragma once

#include <optional>
#include <vector>

#include "toricwidth/divisor.hpp"
#include "toricwidth/fan.hpp"

namespace toric {

/// <m, normal> >= offset
struct Halfspace {
  IntVector normal;
  Rational offset;
};

/// Polytope in M_Q given by halfspaces. The momentum polytope of (fan, kappa)
/// uses inner normals: <m, eta_rho> >= -kappa_rho, so the class
/// sum kappa_rho D_rho corresponds to P.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  bool contains(const RatVector& point) const;
  bool bounded() const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
};

/// Feasible intersections of `dim` independent boundary hyperplanes,
/// deduplicated and lexicographically sorted. Does not check boundedness.
std::vector<RatVector> enumerate_vertices(std::size_t dim, const std::vector<Halfspace>& halfspaces);

/// Throws EmptyPolytope if the system is infeasible.
LatticePolytope momentum_polytope(const Fan& fan, const KaehlerClass& kappa);

/// Throws Unbounded.
std::vector<RatVector> vertices(const LatticePolytope& p);

/// max <u, v> - min <u, v> over P. For primitive u this is also the lattice
/// length of the projection of P along u. Throws ZeroDirection.
Rational width_along(const LatticePolytope& p, const IntVector& u);
Rational width_along(const std::vector<RatVector>& verts, const IntVector& u);

struct LatticeWidth {
  Rational value;
  IntVector direction;       // primitive, first nonzero entry positive
  Integer search_bound = 0;  // sup-norm radius the minimum is taken over
  /// The minimum matched the supplied lower bound, so it is the global width.
  bool certified = false;
};

/// Minimum of width_along over primitive directions; ties go to the
/// lexicographically smallest direction. Without `search_bound` the minimum is
/// global (for full-dimensional polytopes) and `search_bound` in the result is
/// a sup-norm radius it also minimizes over. With an explicit `search_bound`
/// the box is searched directly, and when `certificate` (a known lower bound,
/// e.g. gamma) is not met the bound is doubled up to kMaxDoublings times.
LatticeWidth lattice_width(const LatticePolytope& p, std::optional<Integer> search_bound = std::nullopt,
                           std::optional<Rational> certificate = std::nullopt);

}  // namespace toric

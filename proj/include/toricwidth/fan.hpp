#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toricwidth/lattice.hpp"
#include "toricwidth/numbers.hpp"

namespace toric {

using RayIndex = std::size_t;
/// Sorted list of ray indices.
using Cone = std::vector<RayIndex>;

/// A fan given by primitive ray generators and its maximal cones. Rays keep
/// the order they were given in; every index-based quantity (kappa, relations)
/// refers to that order.
class Fan {
 public:
  /// Throws RayNotPrimitive, DuplicateRay or InvalidCone.
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones);

  std::size_t dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(RayIndex i) const { return rays_[i]; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  /// dim x ray_count matrix with the rays as columns.
  IntMatrix ray_matrix() const;
  /// True iff `indices` is contained in the generator set of some max cone.
  bool is_face(const Cone& indices) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
};

struct FanReport {
  bool simplicial = false;
  bool smooth = false;
  bool complete = false;
  bool pure = false;

  bool smooth_complete() const { return smooth && complete; }
  bool operator==(const FanReport&) const = default;
};

/// Completeness is decided combinatorially: the fan is pure, every facet of a
/// max cone lies in exactly two max cones which sit on opposite sides of it,
/// and the max-cone adjacency graph is connected.
FanReport validate_fan(const Fan& fan);

struct LocatedCone {
  Cone cone;                       // empty for the zero cone
  std::vector<Rational> coefficients;  // strictly positive, aligned with `cone`
};

/// The cone containing `v` in its relative interior together with the
/// positive coefficients of `v` in its generators. Throws OutsideSupport.
LocatedCone locate_cone(const Fan& fan, const IntVector& v);

struct Wall {
  Cone facet;
  std::size_t left;   // index into max_cones
  std::size_t right;  // left < right
  bool operator==(const Wall&) const = default;
};

/// Every codimension-one face with its two neighbouring max cones, ordered by
/// facet. Throws NotComplete when a facet does not have exactly two neighbours.
std::vector<Wall> walls(const Fan& fan);

}  // namespace toric

#include "toricwidth/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

IntMatrix generator_matrix(const Fan& fan, const Cone& cone) {
  std::vector<IntVector> cols;
  cols.reserve(cone.size());
  for (RayIndex i : cone) cols.push_back(fan.ray(i));
  return IntMatrix::from_columns(cols, fan.dim());
}

std::vector<Cone> facets_of(const Cone& cone) {
  std::vector<Cone> out;
  for (std::size_t skip = 0; skip < cone.size(); ++skip) {
    Cone f;
    for (std::size_t i = 0; i < cone.size(); ++i)
      if (i != skip) f.push_back(cone[i]);
    out.push_back(std::move(f));
  }
  return out;
}

RayIndex opposite_ray(const Cone& cone, const Cone& facet) {
  for (RayIndex r : cone)
    if (!std::binary_search(facet.begin(), facet.end(), r)) return r;
  return cone.front();
}

// Sign of det[facet rays | extra ray].
int side_of_facet(const Fan& fan, const Cone& facet, RayIndex extra) {
  Cone cols = facet;
  cols.push_back(extra);
  const Integer d = determinant(generator_matrix(fan, cols));
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != dim_) {
      throw ToricError(ErrorCode::ShapeMismatch, "ray " + std::to_string(i) + " has wrong length");
    }
    if (content(rays_[i]) != 1) {
      throw ToricError(ErrorCode::RayNotPrimitive, "ray " + std::to_string(i) + " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == rays_[i]) {
        throw ToricError(ErrorCode::DuplicateRay,
                         "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
  }
  for (auto& cone : max_cones_) {
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      throw ToricError(ErrorCode::InvalidCone, "cone lists a ray twice");
    }
    if (!cone.empty() && cone.back() >= rays_.size()) {
      throw ToricError(ErrorCode::InvalidCone, "cone refers to ray " + std::to_string(cone.back()) +
                                                   " but only " + std::to_string(rays_.size()) +
                                                   " rays exist");
    }
  }
  for (std::size_t i = 0; i < max_cones_.size(); ++i)
    for (std::size_t j = 0; j < max_cones_.size(); ++j) {
      if (i == j) continue;
      if (std::includes(max_cones_[j].begin(), max_cones_[j].end(), max_cones_[i].begin(),
                        max_cones_[i].end())) {
        throw ToricError(ErrorCode::InvalidCone, "max cone " + std::to_string(i) +
                                                     " is contained in max cone " + std::to_string(j));
      }
    }
}

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_columns(rays_, dim_); }

bool Fan::is_face(const Cone& indices) const {
  return std::any_of(max_cones_.begin(), max_cones_.end(), [&](const Cone& c) {
    return std::includes(c.begin(), c.end(), indices.begin(), indices.end());
  });
}

FanReport validate_fan(const Fan& fan) {
  FanReport report;
  report.simplicial = true;
  report.smooth = true;
  report.pure = !fan.max_cones().empty();
  for (const Cone& cone : fan.max_cones()) {
    const IntMatrix g = generator_matrix(fan, cone);
    const std::size_t r = rank(g);
    if (r != cone.size()) report.simplicial = false;
    if (r != fan.dim()) report.pure = false;
    if (r == cone.size() && !cone.empty()) {
      const auto factors = smith_normal_form(g).invariant_factors();
      if (!std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; })) {
        report.smooth = false;
      }
    }
  }
  report.smooth = report.smooth && report.simplicial;

  if (!report.pure || !report.simplicial || fan.dim() == 0) return report;

  std::map<Cone, std::vector<std::size_t>> neighbours;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c)
    for (auto& f : facets_of(fan.max_cones()[c])) neighbours[f].push_back(c);

  std::vector<std::size_t> parent(fan.max_cones().size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  bool paired = true;
  for (const auto& [facet, cones] : neighbours) {
    if (cones.size() != 2) {
      paired = false;
      break;
    }
    const RayIndex p = opposite_ray(fan.max_cones()[cones[0]], facet);
    const RayIndex q = opposite_ray(fan.max_cones()[cones[1]], facet);
    if (side_of_facet(fan, facet, p) * side_of_facet(fan, facet, q) >= 0) {
      paired = false;
      break;
    }
    parent[find(cones[0])] = find(cones[1]);
  }
  bool connected = true;
  for (std::size_t c = 0; c < parent.size(); ++c) connected = connected && find(c) == find(0);
  report.complete = paired && connected;
  return report;
}

LocatedCone locate_cone(const Fan& fan, const IntVector& v) {
  if (v.size() != fan.dim()) throw ToricError(ErrorCode::ShapeMismatch, "vector has wrong length");
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return {};
  const RatVector target(v.begin(), v.end());
  for (const Cone& cone : fan.max_cones()) {
    const auto coeffs = solve_exact(generator_matrix(fan, cone), target);
    if (!coeffs) continue;
    if (std::any_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c < 0; })) continue;
    LocatedCone out;
    for (std::size_t i = 0; i < cone.size(); ++i)
      if ((*coeffs)[i] > 0) {
        out.cone.push_back(cone[i]);
        out.coefficients.push_back((*coeffs)[i]);
      }
    return out;
  }
  throw ToricError(ErrorCode::OutsideSupport, "vector lies outside the support of the fan");
}

std::vector<Wall> walls(const Fan& fan) {
  std::map<Cone, std::vector<std::size_t>> neighbours;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    if (fan.max_cones()[c].size() != fan.dim()) {
      throw ToricError(ErrorCode::NotComplete, "max cone " + std::to_string(c) + " is not full-dimensional");
    }
    for (auto& f : facets_of(fan.max_cones()[c])) neighbours[f].push_back(c);
  }
  std::vector<Wall> out;
  for (const auto& [facet, cones] : neighbours) {
    if (cones.size() != 2) {
      throw ToricError(ErrorCode::NotComplete,
                       "a facet has " + std::to_string(cones.size()) + " neighbouring max cones");
    }
    out.push_back(Wall{facet, std::min(cones[0], cones[1]), std::max(cones[0], cones[1])});
  }
  return out;
}

}  // namespace toric

#include "toricwidth/primcoll.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxRays = 64;

using Mask = std::uint64_t;

Mask to_mask(const Cone& c) {
  Mask m = 0;
  for (RayIndex i : c) m |= Mask{1} << i;
  return m;
}

Cone from_mask(Mask m) {
  Cone c;
  for (RayIndex i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) c.push_back(i);
  return c;
}

}  // namespace

Relation PrimitiveRelation::as_relation(std::size_t ray_count) const {
  IntVector a(ray_count);
  for (RayIndex i : collection.indices) a[i] += 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) a[sigma[i]] -= b[i];
  return Relation(std::move(a));
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan) {
  const std::size_t k = fan.ray_count();
  if (k > kMaxRays) throw ToricError(ErrorCode::ShapeMismatch, "at most 64 rays are supported");
  std::vector<Mask> cones;
  for (const Cone& c : fan.max_cones()) cones.push_back(to_mask(c));
  auto is_face = [&](Mask s) {
    return std::any_of(cones.begin(), cones.end(), [&](Mask c) { return (s & ~c) == 0; });
  };

  // Level-wise search over the subset lattice: a non-face is primitive when
  // all its one-smaller subsets are faces. Only faces are extended.
  std::vector<Mask> out;
  std::set<Mask> faces = {0};
  while (!faces.empty()) {
    std::set<Mask> next_faces;
    std::set<Mask> tried;
    for (Mask f : faces)
      for (std::size_t j = 0; j < k; ++j) {
        const Mask bit = Mask{1} << j;
        if ((f & bit) || !tried.insert(f | bit).second) continue;
        const Mask s = f | bit;
        if (is_face(s)) {
          next_faces.insert(s);
          continue;
        }
        bool minimal = true;
        for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
          const Mask low = rest & (~rest + 1);
          minimal = is_face(s & ~low);
        }
        if (minimal) out.push_back(s);
      }
    faces = std::move(next_faces);
  }

  std::vector<PrimitiveCollection> result;
  for (Mask m : out) result.push_back({from_mask(m)});
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& coll) {
  IntVector sum(fan.dim());
  for (RayIndex i : coll.indices)
    for (std::size_t d = 0; d < fan.dim(); ++d) sum[d] += fan.ray(i)[d];
  const LocatedCone located = locate_cone(fan, sum);

  PrimitiveRelation rel{coll, located.cone, {}, Integer(coll.indices.size())};
  for (const Rational& c : located.coefficients) {
    if (!is_integer(c)) {
      throw ToricError(ErrorCode::NotSmoothCone, "primitive relation has coefficient " + to_string(c));
    }
    rel.b.push_back(boost::multiprecision::numerator(c));
    rel.degree -= rel.b.back();
  }
  return rel;
}

std::vector<PrimitiveRelation> primitive_relations(const Fan& fan) {
  std::vector<PrimitiveRelation> out;
  for (const auto& c : primitive_collections(fan)) out.push_back(primitive_relation(fan, c));
  return out;
}

bool is_fano(const Fan& fan) {
  const auto rels = primitive_relations(fan);
  return std::all_of(rels.begin(), rels.end(), [](const PrimitiveRelation& r) { return r.degree > 0; });
}

std::vector<CurveFamily> minimal_curve_families(const Fan& fan) {
  std::vector<CurveFamily> out;
  for (const auto& r : primitive_relations(fan))
    if (r.sigma.empty()) out.push_back({r.collection, Integer(r.collection.indices.size())});
  if (out.empty()) {
    throw ToricError(ErrorCode::InternalContradiction,
                     "a complete smooth fan must have a zero-sum primitive collection");
  }
  return out;
}

CurveCertificate free_curve_certificate(const Fan& fan, const Relation& rel,
                                        const std::optional<KaehlerClass>& kappa,
                                        const std::optional<std::vector<Rational>>& markers) {
  if (rel.size() != fan.ray_count()) throw ToricError(ErrorCode::ShapeMismatch, "relation length mismatch");
  const auto& a = rel.coefficients();
  if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; })) {
    throw ToricError(ErrorCode::ZeroRelation, "the zero relation has no curve");
  }
  if (!rel.nonneg()) throw ToricError(ErrorCode::NotARelation, "relation has a negative entry");

  std::vector<RayIndex> support;
  for (RayIndex r = 0; r < a.size(); ++r)
    if (a[r] > 0) support.push_back(r);

  CurveCertificate cert;
  cert.relation = rel;
  if (markers && markers->size() != support.size()) {
    throw ToricError(ErrorCode::ShapeMismatch, "need one marker per ray with a_rho > 0");
  }
  std::set<Rational> seen;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Rational c = markers ? (*markers)[i] : Rational(static_cast<long long>(i));
    if (!seen.insert(c).second) throw ToricError(ErrorCode::DuplicateMarker, "marker " + to_string(c) + " repeats");
    cert.markers.emplace(support[i], c);
  }

  // Coordinate i of lambda_eta(t - c)^a contributes (t - c)^{a * eta_i}.
  cert.exponents.resize(fan.dim());
  for (std::size_t i = 0; i < fan.dim(); ++i) {
    Integer total = 0;
    for (RayIndex r : support) {
      const Integer e = a[r] * fan.ray(r)[i];
      cert.exponents[i].push_back({cert.markers.at(r), e});
      total += e;
    }
    // The curve extends over t = infinity iff every coordinate has degree 0.
    if (total != 0) {
      throw ToricError(ErrorCode::NotARelation,
                       "coordinate " + std::to_string(i) + " has exponent sum " + to_string(total));
    }
  }

  // Order of vanishing at c_rho is a_rho * eta_rho; eta_rho is primitive, so
  // the multiplicity D_rho . C is the content of that vector.
  for (RayIndex r : support) {
    IntVector orders;
    for (std::size_t i = 0; i < fan.dim(); ++i)
      for (const auto& me : cert.exponents[i])
        if (me.marker == cert.markers.at(r)) orders.push_back(me.exponent);
    const Integer multiplicity = content(orders);
    if (multiplicity != a[r]) {
      throw ToricError(ErrorCode::NotARelation, "vanishing order disagrees with a_rho at ray " + std::to_string(r));
    }
    cert.intersection_numbers.emplace(r, multiplicity);
  }

  if (kappa) cert.symplectic_area = intersect(*kappa, rel);
  return cert;
}

}  // namespace toric

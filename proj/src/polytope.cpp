#include "toricwidth/polytope.hpp"

#include <algorithm>
#include <functional>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

constexpr int kMaxDoublings = 4;

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Calls f on every combination of k indices out of n, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Halfspace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  for (const auto& h : halfspaces_)
    if (h.normal.size() != dim_) throw ToricError(ErrorCode::ShapeMismatch, "halfspace normal has wrong length");
}

bool LatticePolytope::contains(const RatVector& point) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return dot(point, h.normal) >= h.offset; });
}

bool LatticePolytope::bounded() const {
  // Bounded iff the recession cone {d : <d, normal> >= 0} is {0}. With
  // spanning normals that cone is pointed, so it is nonzero exactly when
  // some extreme ray (cut out by dim-1 independent normals) satisfies all.
  std::vector<IntVector> normals;
  for (const auto& h : halfspaces_) normals.push_back(h.normal);
  if (dim_ == 0) return true;
  if (normals.empty() || rank(IntMatrix::from_rows(normals, dim_)) < dim_) return false;

  bool has_ray = false;
  for_each_subset(normals.size(), dim_ - 1, [&](const std::vector<std::size_t>& subset) {
    if (has_ray) return;
    std::vector<IntVector> rows;
    for (std::size_t i : subset) rows.push_back(normals[i]);
    const auto kernel = rows.empty() ? std::vector<IntVector>{}
                                     : kernel_basis(IntMatrix::from_rows(rows, dim_));
    std::vector<IntVector> candidates;
    if (rows.empty()) {
      candidates.push_back(IntVector{1});
    } else if (kernel.size() == 1) {
      candidates.push_back(kernel.front());
    } else {
      return;
    }
    for (IntVector d : candidates)
      for (int sign : {1, -1}) {
        IntVector signed_d = d;
        if (sign < 0)
          for (auto& x : signed_d) x = -x;
        if (std::all_of(normals.begin(), normals.end(), [&](const IntVector& n) { return dot(n, signed_d) >= 0; })) {
          has_ray = true;
        }
      }
  });
  return !has_ray;
}

std::vector<RatVector> enumerate_vertices(std::size_t dim, const std::vector<Halfspace>& halfspaces) {
  std::vector<RatVector> out;
  if (dim == 0) return {RatVector{}};
  LatticePolytope p(dim, halfspaces);
  for_each_subset(halfspaces.size(), dim, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> rows;
    RatVector rhs;
    for (std::size_t i : subset) {
      rows.push_back(halfspaces[i].normal);
      rhs.push_back(halfspaces[i].offset);
    }
    const auto point = solve_exact(IntMatrix::from_rows(rows, dim), rhs);
    if (point && p.contains(*point)) out.push_back(*point);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticePolytope momentum_polytope(const Fan& fan, const KaehlerClass& kappa) {
  if (kappa.size() != fan.ray_count()) throw ToricError(ErrorCode::ShapeMismatch, "kappa length mismatch");
  std::vector<Halfspace> hs;
  for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) hs.push_back({fan.ray(rho), -kappa.kappa[rho]});
  LatticePolytope p(fan.dim(), std::move(hs));
  if (p.bounded() && enumerate_vertices(p.dim(), p.halfspaces()).empty()) {
    throw ToricError(ErrorCode::EmptyPolytope, "the momentum polytope is empty");
  }
  return p;
}

std::vector<RatVector> vertices(const LatticePolytope& p) {
  if (!p.bounded()) throw ToricError(ErrorCode::Unbounded, "polytope is unbounded");
  return enumerate_vertices(p.dim(), p.halfspaces());
}

Rational width_along(const std::vector<RatVector>& verts, const IntVector& u) {
  if (is_zero(u)) throw ToricError(ErrorCode::ZeroDirection, "width along the zero functional");
  if (verts.empty()) throw ToricError(ErrorCode::EmptyPolytope, "width of an empty polytope");
  Rational lo = dot(verts.front(), u);
  Rational hi = lo;
  for (const auto& v : verts) {
    const Rational x = dot(v, u);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi - lo;
}

Rational width_along(const LatticePolytope& p, const IntVector& u) {
  if (is_zero(u)) throw ToricError(ErrorCode::ZeroDirection, "width along the zero functional");
  return width_along(vertices(p), u);
}

namespace {

// d = length * p with p primitive.
struct LatticeSegment {
  IntVector direction;
  Rational length;
};

LatticeSegment as_segment(const RatVector& d) {
  Integer common = 1;
  for (const auto& x : d) common = boost::multiprecision::lcm(common, denominator(x));
  IntVector scaled;
  for (const auto& x : d) scaled.push_back(numerator(x) * (common / denominator(x)));
  const Integer g = content(scaled);
  for (auto& x : scaled) x /= g;
  return {std::move(scaled), Rational(g, common)};
}

IntVector primitive_part(const RatVector& v) { return as_segment(v).direction; }

bool canonical_sign(const IntVector& u) {
  for (const auto& x : u)
    if (x != 0) return x > 0;
  return false;
}

// Minimum over ||u||_inf <= cap, enumerated directly.
LatticeWidth box_search(const std::vector<RatVector>& verts, std::size_t n, const Integer& cap) {
  LatticeWidth best;
  bool have = false;
  const long long c = cap.convert_to<long long>();
  // Odometer over [-c, c]^n in lexicographic order; keep representatives
  // whose first nonzero entry is positive.
  std::vector<long long> u(n, -c);
  for (;;) {
    IntVector dir(u.begin(), u.end());
    if (canonical_sign(dir) && content(dir) == 1) {
      const Rational w = width_along(verts, dir);
      if (!have || w < best.value) {
        have = true;
        best.value = w;
        best.direction = std::move(dir);
      }
    }
    std::size_t i = n;
    while (i > 0 && u[i - 1] == c) {
      u[i - 1] = -c;
      --i;
    }
    if (i == 0) break;
    ++u[i - 1];
  }
  best.search_bound = cap;
  return best;
}

Integer spread_bound(const std::vector<RatVector>& verts, std::size_t n) {
  Rational spread = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational lo = verts.front()[i], hi = lo;
    for (const auto& v : verts) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    spread = std::max(spread, hi - lo);
  }
  return ceil(spread) + 1;
}

// Global minimum. Take n independent vertex differences d_i = l_i p_i with
// p_i primitive. Any u of width <= W has |<u, p_i>| <= W / l_i, so it is
// enough to run over the integer vectors w = P u in that box.
std::optional<LatticeWidth> exact_search(const std::vector<RatVector>& verts, std::size_t n) {
  std::vector<LatticeSegment> segments;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      RatVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = verts[b][i] - verts[a][i];
      auto seg = as_segment(d);
      if (!canonical_sign(seg.direction)) {
        for (auto& x : seg.direction) x = -x;
      }
      segments.push_back(std::move(seg));
    }
  // Longest first: greedy on a matroid maximizes the product of the lengths.
  std::sort(segments.begin(), segments.end(), [](const LatticeSegment& x, const LatticeSegment& y) {
    return x.length != y.length ? x.length > y.length : x.direction < y.direction;
  });
  std::vector<IntVector> rows;
  std::vector<Rational> lengths;
  for (const auto& seg : segments) {
    if (rows.size() == n) break;
    rows.push_back(seg.direction);
    if (rank(IntMatrix::from_rows(rows, n)) < rows.size()) {
      rows.pop_back();
      continue;
    }
    lengths.push_back(seg.length);
  }
  if (rows.size() < n) return std::nullopt;  // not full-dimensional

  const IntMatrix P = IntMatrix::from_rows(rows, n);
  std::vector<RatVector> inverse_cols;  // columns of P^{-1}
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, Rational(0));
    e[j] = 1;
    inverse_cols.push_back(*solve_exact(P, e));
  }

  // Any direction bounds the width from above.
  Rational cap;
  bool have_cap = false;
  auto offer = [&](const IntVector& u) {
    const Rational w = width_along(verts, u);
    if (!have_cap || w < cap) cap = w;
    have_cap = true;
  };
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, Integer(0));
    e[j] = 1;
    offer(e);
    offer(primitive_part(inverse_cols[j]));
  }

  std::vector<long long> radius(n);
  for (std::size_t i = 0; i < n; ++i) radius[i] = floor(cap / lengths[i]).convert_to<long long>();

  LatticeWidth best;
  bool have = false;
  std::vector<long long> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = -radius[i];
  for (;;) {
    RatVector u(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0)
        for (std::size_t i = 0; i < n; ++i) u[i] += inverse_cols[j][i] * w[j];
    if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return is_integer(x); })) {
      IntVector dir;
      for (const auto& x : u) dir.push_back(numerator(x));
      if (canonical_sign(dir) && content(dir) == 1) {
        const Rational value = width_along(verts, dir);
        if (!have || value < best.value || (value == best.value && dir < best.direction)) {
          have = true;
          best.value = value;
          best.direction = std::move(dir);
        }
      }
    }
    std::size_t i = n;
    while (i > 0 && w[i - 1] == radius[i - 1]) {
      w[i - 1] = -radius[i - 1];
      --i;
    }
    if (i == 0) break;
    ++w[i - 1];
  }
  if (!have) return std::nullopt;

  // Every u with ||u||_inf <= search_bound and width <= cap lies in the box,
  // so the result is also the minimum over that sup-norm ball.
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(inverse_cols[j][i]) * radius[j];
    bound = std::max(bound, floor(row));
  }
  best.search_bound = bound;
  return best;
}

}  // namespace

LatticeWidth lattice_width(const LatticePolytope& p, std::optional<Integer> search_bound,
                           std::optional<Rational> certificate) {
  const auto verts = vertices(p);
  if (verts.empty()) throw ToricError(ErrorCode::EmptyPolytope, "width of an empty polytope");
  const std::size_t n = p.dim();
  if (n == 0) throw ToricError(ErrorCode::ZeroDirection, "no nonzero functional on a zero-dimensional lattice");
  if (search_bound && *search_bound < 1) {
    throw ToricError(ErrorCode::ZeroDirection, "search bound must be positive");
  }

  if (!search_bound) {
    if (auto exact = exact_search(verts, n)) {
      exact->certified = certificate && exact->value == *certificate;
      return *exact;
    }
  }

  Integer bound = search_bound ? *search_bound : spread_bound(verts, n);
  LatticeWidth result = box_search(verts, n, bound);
  if (certificate) {
    for (int round = 0; round < kMaxDoublings && result.value > *certificate; ++round) {
      bound *= 2;
      result = box_search(verts, n, bound);
    }
    result.certified = result.value == *certificate;
  }
  return result;
}

}  // namespace toric

#include "toricwidth/relations.hpp"

#include <algorithm>
#include <set>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

bool dominates(const IntVector& big, const IntVector& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

IntVector image(const Fan& fan, const IntVector& a) {
  IntVector s(fan.dim());
  for (std::size_t rho = 0; rho < a.size(); ++rho) {
    if (a[rho] == 0) continue;
    for (std::size_t i = 0; i < fan.dim(); ++i) s[i] += a[rho] * fan.ray(rho)[i];
  }
  return s;
}

// Columns of a matrix with the same integer kernel as the ray matrix, chosen
// canonically: the HNF basis of the saturated row lattice. The search below
// then does not depend on the lattice basis the rays are written in, and
// stays small when the rays themselves have large entries.
std::vector<IntVector> canonical_columns(const Fan& fan, const std::vector<IntVector>& kernel) {
  const std::size_t k = fan.ray_count();
  const auto rows = kernel_basis(IntMatrix::from_rows(kernel, k));
  std::vector<IntVector> cols(k, IntVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) cols[j][i] = rows[i][j];
  return cols;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

void require_nonnegative(const Fan& fan, const KaehlerClass& kappa) {
  if (kappa.size() != fan.ray_count()) throw ToricError(ErrorCode::ShapeMismatch, "kappa length mismatch");
  if (!kappa.nonnegative()) {
    throw ToricError(ErrorCode::NegativeKappa, "kappa has a negative entry; normalize the class first");
  }
}

// Visits every a >= 0 with 1 <= sum a <= max_degree.
template <typename F>
void for_each_bounded_degree(std::size_t k, unsigned max_degree, F&& f) {
  IntVector a(k);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining, bool nonzero) -> void {
    if (pos == k) {
      if (nonzero) f(a);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      a[pos] = v;
      self(self, pos + 1, remaining - v, nonzero || v > 0);
    }
    a[pos] = 0;
  };
  rec(rec, 0, max_degree, false);
}

}  // namespace

void check_relation(const Fan& fan, const Relation& rel) {
  if (rel.size() != fan.ray_count()) throw ToricError(ErrorCode::ShapeMismatch, "relation length mismatch");
  if (!is_zero(image(fan, rel.coefficients()))) {
    throw ToricError(ErrorCode::NotARelation, "sum of a_rho * eta_rho is not zero");
  }
}

std::vector<Relation> minimal_nonneg_relations(const Fan& fan) {
  const std::size_t k = fan.ray_count();
  std::vector<IntVector> solutions;
  const auto kernel = kernel_basis(fan.ray_matrix());
  if (kernel.empty()) return {};
  const auto cols = canonical_columns(fan, kernel);
  auto image_of = [&](const IntVector& a) {
    IntVector s(cols.front().size());
    for (std::size_t rho = 0; rho < k; ++rho)
      if (a[rho] != 0)
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += a[rho] * cols[rho][i];
    return s;
  };
  std::set<IntVector> level;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector e(k);
    e[j] = 1;
    level.insert(std::move(e));
  }
  while (!level.empty()) {
    std::set<IntVector> next;
    for (const IntVector& x : level) {
      const IntVector s = image_of(x);
      if (is_zero(s)) {
        solutions.push_back(x);
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (dot(s, cols[j]) >= 0) continue;
        IntVector y = x;
        y[j] += 1;
        const bool pruned = std::any_of(solutions.begin(), solutions.end(),
                                        [&](const IntVector& m) { return dominates(y, m); });
        if (!pruned) next.insert(std::move(y));
      }
    }
    level = std::move(next);
  }
  std::sort(solutions.begin(), solutions.end());
  std::vector<Relation> out;
  out.reserve(solutions.size());
  for (auto& s : solutions) out.emplace_back(std::move(s));
  return out;
}

GammaResult gamma(const Fan& fan, const KaehlerClass& kappa) {
  require_nonnegative(fan, kappa);
  const auto minimal = minimal_nonneg_relations(fan);
  if (minimal.empty()) throw ToricError(ErrorCode::NoRelation, "the fan has no nonzero nonnegative relation");

  GammaResult result{intersect(kappa, minimal.front()), minimal.front(), false};
  for (const auto& r : minimal) {
    const Rational v = intersect(kappa, r);
    if (v < result.value) {  // minimal is sorted, so strict < keeps the lexicographic tie-break
      result.value = v;
      result.minimizer = r;
    }
  }
  for (const auto& r : minimal) {
    const auto& a = r.coefficients();
    const bool binary = std::all_of(a.begin(), a.end(), [](const Integer& x) { return x <= 1; });
    if (binary && intersect(kappa, r) == result.value) result.attained_by_binary = true;
  }
  return result;
}

Rational lambda_bound(const Fan& fan, const KaehlerClass& kappa) {
  require_nonnegative(fan, kappa);
  bool found = false;
  Rational best = 0;
  for_each_bounded_degree(fan.ray_count(), static_cast<unsigned>(fan.dim() + 1), [&](const IntVector& a) {
    if (!is_zero(image(fan, a))) return;
    const Rational v = intersect(kappa, Relation(a));
    if (!found || v > best) best = v;
    found = true;
  });
  if (!found) throw ToricError(ErrorCode::NoRelation, "no nonnegative relation of degree at most dim + 1");
  return best;
}

std::vector<Relation> relations_beyond_lambda_cap(const Fan& fan) {
  std::vector<Relation> out;
  for (auto& r : minimal_nonneg_relations(fan))
    if (r.total_degree() > Integer(fan.dim() + 1)) out.push_back(std::move(r));
  return out;
}

Rational gamma_by_brute_force(const Fan& fan, const KaehlerClass& kappa, unsigned bound) {
  require_nonnegative(fan, kappa);
  const std::size_t k = fan.ray_count();
  const std::size_t n = fan.dim();
  IntVector a(k);
  IntVector s(n);
  Rational objective = 0;
  bool found = false;
  Rational best = 0;
  // Odometer over [0, bound]^k, updating the image and objective incrementally.
  for (;;) {
    std::size_t i = 0;
    while (i < k && a[i] == bound) {
      for (std::size_t d = 0; d < n; ++d) s[d] -= a[i] * fan.ray(i)[d];
      objective -= kappa.kappa[i] * a[i];
      a[i] = 0;
      ++i;
    }
    if (i == k) break;
    a[i] += 1;
    for (std::size_t d = 0; d < n; ++d) s[d] += fan.ray(i)[d];
    objective += kappa.kappa[i];
    if (is_zero(s) && (!found || objective < best)) {
      best = objective;
      found = true;
    }
  }
  if (!found) throw ToricError(ErrorCode::NoRelation, "no nonzero relation within the entry bound");
  return best;
}

}  // namespace toric

#pragma once

#include <vector>

#include "toricwidth/divisor.hpp"
#include "toricwidth/fan.hpp"
#include "toricwidth/relation.hpp"

namespace toric {

struct GammaResult {
  Rational value;
  Relation minimizer;  // lexicographically smallest among minimizers
  bool attained_by_binary = false;
};

/// All componentwise-minimal nonzero solutions a >= 0 of sum a_rho eta_rho = 0
/// (the Hilbert basis of the nonnegative relation monoid), sorted
/// lexicographically. Contejean-Devie completion: a partial vector x with
/// image s = sum x_rho eta_rho is only extended by rays with <s, eta_j> < 0,
/// level by level in total degree, and every extension that dominates an
/// already found solution is dropped.
std::vector<Relation> minimal_nonneg_relations(const Fan& fan);

/// min sum kappa_rho a_rho over nonzero nonnegative relations. Since kappa >= 0
/// the objective is monotone, so the minimum is attained on a minimal one.
/// Throws NegativeKappa, NoRelation.
GammaResult gamma(const Fan& fan, const KaehlerClass& kappa);

/// Exhaustive max of sum kappa_rho a_rho over nonnegative relations with
/// total degree in [1, dim + 1]. Throws NegativeKappa, NoRelation.
Rational lambda_bound(const Fan& fan, const KaehlerClass& kappa);

/// Minimal nonnegative relations whose total degree exceeds dim + 1, i.e.
/// curve classes that the degree cap of lambda_bound never sees.
std::vector<Relation> relations_beyond_lambda_cap(const Fan& fan);

/// Reference minimum over every relation with entries in [0, bound]. Throws
/// NegativeKappa, and NoRelation when the box holds no nonzero relation.
Rational gamma_by_brute_force(const Fan& fan, const KaehlerClass& kappa, unsigned bound);

/// Throws NotARelation unless sum a_rho eta_rho = 0.
void check_relation(const Fan& fan, const Relation& rel);

}  // namespace toric

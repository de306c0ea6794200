#pragma once

#include <vector>

#include "gin3/ideal.hpp"
#include "gin3/polynomial.hpp"

namespace gin3 {

SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g,
                              const PrimeField& F);

/// Full normal form of f modulo the basis: leading terms are cancelled
/// against basis elements whenever divisible, irreducible leading terms
/// move to the remainder.
SparsePolynomial normal_form(const SparsePolynomial& f,
                             const std::vector<SparsePolynomial>& basis, const PrimeField& F);

struct TruncatedBasisResult {
  /// Monic homogeneous basis elements of degree <= degree_cap. Together
  /// they determine every initial-ideal generator of degree <= degree_cap.
  std::vector<SparsePolynomial> basis;
  MonomialIdeal initial_ideal;
  int degree_cap = 0;
  /// Whether the degree-cap slice of the initial ideal is full; for a
  /// regular sequence with cap = d1+d2+d3-2 it must be.
  bool artinian_at_cap = false;
};

/// Degree-truncated Buchberger run under the revlex order, for homogeneous
/// inputs. S-pairs are processed in increasing lcm degree and pairs above
/// the cap are discarded. The truncation is sound: an S-polynomial of two
/// homogeneous polynomials is homogeneous of the lcm degree, and reduction
/// against homogeneous polynomials preserves that degree, so every basis
/// element descending from a pair of degree > cap has leading-monomial
/// degree > cap and cannot contribute a generator of the initial ideal at
/// or below the cap.
TruncatedBasisResult buchberger_initial_ideal(const std::vector<SparsePolynomial>& polys,
                                              int degree_cap, const PrimeField& F);

}  // namespace gin3

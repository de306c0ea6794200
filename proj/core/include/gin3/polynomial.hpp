#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "gin3/monomial.hpp"
#include "gin3/prime_field.hpp"
#include "gin3/rng.hpp"

namespace gin3 {

/// Sparse polynomial over a prime field: nonzero coefficients keyed by
/// monomial, held in decreasing revlex order so the leading term is first.
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, std::int64_t, RevlexGreater>;

  SparsePolynomial() = default;

  static SparsePolynomial term(const Monomial& m, std::int64_t coeff, const PrimeField& F);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  std::int64_t leading_coeff() const { return terms_.begin()->second; }

  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : leading_monomial().degree(); }

  /// All terms share one degree (vacuously true when zero).
  bool is_homogeneous() const;

  void add_term(const Monomial& m, std::int64_t coeff, const PrimeField& F);

  std::string str() const;

 private:
  TermMap terms_;
};

SparsePolynomial add(const SparsePolynomial& f, const SparsePolynomial& g, const PrimeField& F);
SparsePolynomial sub(const SparsePolynomial& f, const SparsePolynomial& g, const PrimeField& F);
SparsePolynomial scale(const SparsePolynomial& f, std::int64_t c, const PrimeField& F);
/// f * (c * m).
SparsePolynomial times_term(const SparsePolynomial& f, const Monomial& m, std::int64_t c,
                            const PrimeField& F);
SparsePolynomial multiply(const SparsePolynomial& f, const SparsePolynomial& g,
                          const PrimeField& F);
/// Divides by the leading coefficient.
SparsePolynomial monic(const SparsePolynomial& f, const PrimeField& F);

/// Invertible 3x3 change of coordinates over the field.
struct LinearChange {
  std::array<std::array<std::int64_t, 3>, 3> rows{};  // x_i -> sum_j rows[i][j] x_j
  std::int64_t det = 1;
};

LinearChange identity_change();
std::int64_t determinant(const std::array<std::array<std::int64_t, 3>, 3>& m,
                         const PrimeField& F);
/// Uniform over GL_3(F_p) by rejection on the determinant.
LinearChange random_invertible_change(SplitMix64& rng, const PrimeField& F);
LinearChange inverse_change(const LinearChange& g, const PrimeField& F);

/// Substitutes x_i -> sum_j g.rows[i][j] x_j and re-expands. Degree and
/// homogeneity are preserved.
SparsePolynomial apply_change(const LinearChange& g, const SparsePolynomial& f,
                              const PrimeField& F);

/// Dense-support random homogeneous polynomial: every degree-d monomial
/// receives an independent uniform coefficient (zero allowed per
/// coefficient; an all-zero draw is resampled).
SparsePolynomial random_homogeneous(int degree, SplitMix64& rng, const PrimeField& F);
/// Deterministic-for-seed convenience overload.
SparsePolynomial random_homogeneous(int degree, std::uint64_t seed, const PrimeField& F);

}  // namespace gin3

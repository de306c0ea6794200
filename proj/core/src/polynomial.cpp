#include "gin3/polynomial.hpp"

#include <stdexcept>

namespace gin3 {

SparsePolynomial SparsePolynomial::term(const Monomial& m, std::int64_t coeff,
                                        const PrimeField& F) {
  SparsePolynomial f;
  f.add_term(m, coeff, F);
  return f;
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void SparsePolynomial::add_term(const Monomial& m, std::int64_t coeff, const PrimeField& F) {
  coeff = F.reduce(coeff);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second = F.add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c);
    if (m.degree() > 0) s += "*" + m.str();
  }
  return s;
}

SparsePolynomial add(const SparsePolynomial& f, const SparsePolynomial& g, const PrimeField& F) {
  SparsePolynomial h = f;
  for (const auto& [m, c] : g.terms()) h.add_term(m, c, F);
  return h;
}

SparsePolynomial sub(const SparsePolynomial& f, const SparsePolynomial& g, const PrimeField& F) {
  SparsePolynomial h = f;
  for (const auto& [m, c] : g.terms()) h.add_term(m, F.neg(c), F);
  return h;
}

SparsePolynomial scale(const SparsePolynomial& f, std::int64_t c, const PrimeField& F) {
  SparsePolynomial h;
  c = F.reduce(c);
  for (const auto& [m, a] : f.terms()) h.add_term(m, F.mul(a, c), F);
  return h;
}

SparsePolynomial times_term(const SparsePolynomial& f, const Monomial& m, std::int64_t c,
                            const PrimeField& F) {
  SparsePolynomial h;
  c = F.reduce(c);
  for (const auto& [u, a] : f.terms()) {
    const Monomial prod{{u.e[0] + m.e[0], u.e[1] + m.e[1], u.e[2] + m.e[2]}};
    h.add_term(prod, F.mul(a, c), F);
  }
  return h;
}

SparsePolynomial multiply(const SparsePolynomial& f, const SparsePolynomial& g,
                          const PrimeField& F) {
  SparsePolynomial h;
  for (const auto& [m, c] : g.terms()) h = add(h, times_term(f, m, c, F), F);
  return h;
}

SparsePolynomial monic(const SparsePolynomial& f, const PrimeField& F) {
  if (f.is_zero()) throw std::domain_error("monic: zero polynomial");
  return scale(f, F.inv(f.leading_coeff()), F);
}

LinearChange identity_change() {
  LinearChange g;
  for (int i = 0; i < 3; ++i) g.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  g.det = 1;
  return g;
}

std::int64_t determinant(const std::array<std::array<std::int64_t, 3>, 3>& m,
                         const PrimeField& F) {
  const auto minor = [&](int r0, int c0, int r1, int c1) {
    return F.sub(F.mul(m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)],
                       m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)]),
                 F.mul(m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)],
                       m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)]));
  };
  std::int64_t det = F.mul(m[0][0], minor(1, 1, 2, 2));
  det = F.sub(det, F.mul(m[0][1], minor(1, 0, 2, 2)));
  det = F.add(det, F.mul(m[0][2], minor(1, 0, 2, 1)));
  return det;
}

LinearChange random_invertible_change(SplitMix64& rng, const PrimeField& F) {
  LinearChange g;
  do {
    for (auto& row : g.rows)
      for (auto& a : row) a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(F.p())));
    g.det = determinant(g.rows, F);
  } while (g.det == 0);
  return g;
}

LinearChange inverse_change(const LinearChange& g, const PrimeField& F) {
  if (g.det == 0) throw std::domain_error("inverse_change: singular matrix");
  const auto& m = g.rows;
  const auto cof = [&](int r0, int c0, int r1, int c1) {
    return F.sub(F.mul(m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)],
                       m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)]),
                 F.mul(m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)],
                       m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)]));
  };
  const std::int64_t idet = F.inv(g.det);
  LinearChange h;
  // adjugate transpose
  h.rows[0] = {F.mul(idet, cof(1, 1, 2, 2)), F.mul(idet, F.neg(cof(0, 1, 2, 2))),
               F.mul(idet, cof(0, 1, 1, 2))};
  h.rows[1] = {F.mul(idet, F.neg(cof(1, 0, 2, 2))), F.mul(idet, cof(0, 0, 2, 2)),
               F.mul(idet, F.neg(cof(0, 0, 1, 2)))};
  h.rows[2] = {F.mul(idet, cof(1, 0, 2, 1)), F.mul(idet, F.neg(cof(0, 0, 2, 1))),
               F.mul(idet, cof(0, 0, 1, 1))};
  h.det = F.inv(g.det);
  return h;
}

SparsePolynomial apply_change(const LinearChange& g, const SparsePolynomial& f,
                              const PrimeField& F) {
  // Linear forms g(x_i), with powers built by repeated multiplication.
  std::array<SparsePolynomial, 3> image;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Monomial xj;
      xj.e[static_cast<std::size_t>(j)] = 1;
      image[static_cast<std::size_t>(i)].add_term(
          xj, g.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], F);
    }
  SparsePolynomial out;
  for (const auto& [m, c] : f.terms()) {
    SparsePolynomial prod = SparsePolynomial::term(Monomial{}, c, F);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < m.e[static_cast<std::size_t>(i)]; ++e)
        prod = multiply(prod, image[static_cast<std::size_t>(i)], F);
    out = add(out, prod, F);
  }
  return out;
}

SparsePolynomial random_homogeneous(int degree, SplitMix64& rng, const PrimeField& F) {
  if (degree < 1) throw std::invalid_argument("random_homogeneous: degree must be >= 1");
  SparsePolynomial f;
  do {
    f = SparsePolynomial{};
    for (const Monomial& m : monomials_of_degree(degree).members)
      f.add_term(m, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(F.p()))), F);
  } while (f.is_zero());
  return f;
}

SparsePolynomial random_homogeneous(int degree, std::uint64_t seed, const PrimeField& F) {
  SplitMix64 rng(seed);
  return random_homogeneous(degree, rng, F);
}

}  // namespace gin3

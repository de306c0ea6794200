#include "gin3/buchberger.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gin3 {

namespace {

Monomial quotient(const Monomial& num, const Monomial& den) {
  return Monomial{{num.e[0] - den.e[0], num.e[1] - den.e[1], num.e[2] - den.e[2]}};
}

struct Pair {
  int degree;  // degree of lcm of the two leading monomials
  int i, j;

  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
  }
};

}  // namespace

SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g,
                              const PrimeField& F) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("s_polynomial: zero input");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  SparsePolynomial a = times_term(f, quotient(l, f.leading_monomial()),
                                  F.inv(f.leading_coeff()), F);
  SparsePolynomial b = times_term(g, quotient(l, g.leading_monomial()),
                                  F.inv(g.leading_coeff()), F);
  return sub(a, b, F);
}

SparsePolynomial normal_form(const SparsePolynomial& f,
                             const std::vector<SparsePolynomial>& basis, const PrimeField& F) {
  SparsePolynomial h = f;
  SparsePolynomial remainder;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const SparsePolynomial& g : basis) {
      if (!g.leading_monomial().divides(h.leading_monomial())) continue;
      const std::int64_t c = F.mul(h.leading_coeff(), F.inv(g.leading_coeff()));
      h = sub(h, times_term(g, quotient(h.leading_monomial(), g.leading_monomial()), c, F), F);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(h.leading_monomial(), h.leading_coeff(), F);
      SparsePolynomial lt = SparsePolynomial::term(h.leading_monomial(), h.leading_coeff(), F);
      h = sub(h, lt, F);
    }
  }
  return remainder;
}

TruncatedBasisResult buchberger_initial_ideal(const std::vector<SparsePolynomial>& polys,
                                              int degree_cap, const PrimeField& F) {
  std::vector<SparsePolynomial> basis;
  std::vector<Pair> queue;

  const auto push_pairs = [&](int n) {
    for (int i = 0; i < n; ++i) {
      const Monomial l = lcm(basis[static_cast<std::size_t>(i)].leading_monomial(),
                             basis[static_cast<std::size_t>(n)].leading_monomial());
      // Coprime leading monomials: the S-polynomial reduces to zero
      // (Buchberger's product criterion), skip the pair.
      if (l.degree() == basis[static_cast<std::size_t>(i)].leading_monomial().degree() +
                            basis[static_cast<std::size_t>(n)].leading_monomial().degree())
        continue;
      if (l.degree() > degree_cap) continue;
      queue.push_back(Pair{l.degree(), i, n});
    }
  };

  for (const SparsePolynomial& f : polys) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous())
      throw std::invalid_argument("buchberger_initial_ideal: inputs must be homogeneous");
    if (f.degree() > degree_cap)
      throw std::invalid_argument("buchberger_initial_ideal: input degree exceeds the cap");
    basis.push_back(monic(f, F));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Normal (degree-by-degree) selection: always reduce a pair of minimal
  // lcm degree next.
  while (!queue.empty()) {
    const auto it = std::min_element(queue.begin(), queue.end());
    const Pair p = *it;
    queue.erase(it);
    const SparsePolynomial s = s_polynomial(basis[static_cast<std::size_t>(p.i)],
                                            basis[static_cast<std::size_t>(p.j)], F);
    const SparsePolynomial r = normal_form(s, basis, F);
    if (r.is_zero()) continue;
    basis.push_back(monic(r, F));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  TruncatedBasisResult out;
  out.degree_cap = degree_cap;
  std::vector<Monomial> lms;
  lms.reserve(basis.size());
  for (const SparsePolynomial& g : basis) lms.push_back(g.leading_monomial());
  out.initial_ideal = MonomialIdeal::minimalize(std::move(lms));
  out.initial_ideal.set_max_relevant_degree(degree_cap);
  out.basis = std::move(basis);
  out.artinian_at_cap =
      static_cast<long long>(out.initial_ideal.degree_slice(degree_cap).size()) ==
      slice_size(degree_cap);
  return out;
}

}  // namespace gin3

#include "gin3/ideal.hpp"

#include <algorithm>

namespace gin3 {

namespace {

bool degree_then_revlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return revlex_greater(a, b);
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), degree_then_revlex);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  MonomialIdeal J;
  for (const Monomial& m : monomials) {
    const bool redundant = std::any_of(J.gens_.begin(), J.gens_.end(),
                                       [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) J.gens_.push_back(m);
  }
  if (const auto cap = J.artinian_cap())
    J.max_relevant_degree_ = *cap;
  else if (!J.gens_.empty())
    J.max_relevant_degree_ = J.gens_.back().degree();
  return J;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  const int d = m.degree();
  for (const Monomial& g : gens_) {
    if (g.degree() > d) break;  // sorted by degree
    if (g.divides(m)) return true;
  }
  return false;
}

DegreeSlice MonomialIdeal::degree_slice(int k) const {
  DegreeSlice all = monomials_of_degree(k);
  std::vector<Monomial> members;
  for (const Monomial& m : all.members)
    if (contains(m)) members.push_back(m);
  return DegreeSlice{k, std::move(members)};
}

std::optional<int> MonomialIdeal::pure_power(int i) const {
  std::optional<int> best;
  for (const Monomial& g : gens_) {
    const int a = g.e[static_cast<std::size_t>(i)];
    if (a == g.degree() && a > 0 && (!best || a < *best)) best = a;
  }
  return best;
}

std::optional<int> MonomialIdeal::artinian_cap() const {
  const auto e1 = pure_power(0);
  const auto e2 = pure_power(1);
  const auto e3 = pure_power(2);
  if (!e1 || !e2 || !e3) return std::nullopt;
  return *e1 + *e2 + *e3 - 2;
}

bool is_strongly_stable(const MonomialIdeal& J) {
  for (const Monomial& u : J.generators()) {
    for (int i = 2; i >= 1; --i) {
      if (u.e[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < i; ++j) {
        if (!J.contains(u.exchanged(i, j))) return false;
      }
    }
  }
  return true;
}

bool is_almost_revlex(const MonomialIdeal& J) {
  for (const Monomial& u : J.generators()) {
    for (const Monomial& v : monomials_of_degree(u.degree()).members) {
      if (v == u) break;  // slice is decreasing, so everything before v > u
      if (!J.contains(v)) return false;
    }
  }
  return true;
}

std::vector<long long> quotient_hilbert(const MonomialIdeal& J, int k_max) {
  std::vector<long long> h;
  h.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    long long outside = 0;
    for (const Monomial& m : monomials_of_degree(k).members)
      if (!J.contains(m)) ++outside;
    h.push_back(outside);
  }
  return h;
}

}  // namespace gin3

#pragma once

#include <optional>
#include <vector>

#include "gin3/monomial.hpp"

namespace gin3 {

/// Monomial ideal held by its minimal generating set: no generator divides
/// another, and the generators are sorted by degree ascending, then revlex
/// descending. The default-constructed object is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Builds the ideal generated by the given monomials, discarding every
  /// monomial divisible by another one of the set.
  static MonomialIdeal minimalize(std::vector<Monomial> monomials);

  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  std::size_t generator_count() const { return gens_.size(); }

  /// Membership: m lies in the ideal iff some generator divides it.
  bool contains(const Monomial& m) const;

  /// All degree-k members.
  DegreeSlice degree_slice(int k) const;

  /// Smallest r with x_{i+1}^r in the ideal, if any pure-power generator
  /// exists for that variable.
  std::optional<int> pure_power(int i) const;

  /// e1+e2+e3-2 when all three pure powers x1^e1, x2^e2, x3^e3 lie in the
  /// ideal; from that degree on every slice is full. Empty when the
  /// quotient is not artinian.
  std::optional<int> artinian_cap() const;

  /// Cap for finitely supported queries; set by builders (the artinian cap
  /// when available, otherwise the top generator degree).
  int max_relevant_degree() const { return max_relevant_degree_; }
  void set_max_relevant_degree(int k) { max_relevant_degree_ = k; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Monomial> gens_;
  int max_relevant_degree_ = 0;
};

/// Borel exchange property: for every member u, indices j < i with x_i | u,
/// the exchange x_j*u/x_i is again a member. Checked on generators only;
/// that suffices because a member g*m with generator g either exchanges
/// inside m (stays divisible by g) or inside g (lands in (x_j*g/x_i)*m,
/// and the generator exchange is a member by assumption).
bool is_strongly_stable(const MonomialIdeal& J);

/// Every monomial of the same degree that is revlex-greater than a minimal
/// generator is itself a member.
bool is_almost_revlex(const MonomialIdeal& J);

/// Hilbert function H(S/J, k) for 0 <= k <= k_max, by counting the degree-k
/// monomials outside J: H(S/J,k) = C(k+2,2) - |J_k|.
std::vector<long long> quotient_hilbert(const MonomialIdeal& J, int k_max);

}  // namespace gin3

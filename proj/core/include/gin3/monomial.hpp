#pragma once

#include <array>
#include <string>
#include <vector>

namespace gin3 {

/// Exponent vector of a monomial x1^a x2^b x3^c in K[x1,x2,x3].
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  constexpr int degree() const { return e[0] + e[1] + e[2]; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  constexpr bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }

  /// Product with the variable x_{i+1}, 0 <= i < 3.
  constexpr Monomial times_var(int i) const {
    Monomial m = *this;
    ++m.e[static_cast<std::size_t>(i)];
    return m;
  }

  /// x_{lo+1} * m / x_{hi+1}; requires e[hi] > 0.
  constexpr Monomial exchanged(int hi, int lo) const {
    Monomial m = *this;
    --m.e[static_cast<std::size_t>(hi)];
    ++m.e[static_cast<std::size_t>(lo)];
    return m;
  }

  /// Text form "x1^a*x2^b*x3^c" with zero-exponent factors omitted,
  /// exponent 1 left implicit, and "1" for the empty product.
  std::string str() const;
};

constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
  return Monomial{{a.e[0] > b.e[0] ? a.e[0] : b.e[0], a.e[1] > b.e[1] ? a.e[1] : b.e[1],
                   a.e[2] > b.e[2] ? a.e[2] : b.e[2]}};
}

enum class Ordering { less, equal, greater };

/// Degree-graded reverse lexicographic comparison with x1 > x2 > x3.
/// Within one degree, a > b exactly when the last nonzero entry of
/// the exponent difference e(a) - e(b) is negative; across degrees the
/// higher degree is greater.
Ordering revlex_compare(const Monomial& a, const Monomial& b);

bool revlex_greater(const Monomial& a, const Monomial& b);

/// Strict-weak-order functor for descending revlex sorts and ordered maps.
struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return revlex_greater(a, b); }
};

/// Number of degree-k monomials in three variables: C(k+2,2).
long long slice_size(int k);

/// Position of m within the decreasing-revlex listing of its degree slice
/// (0 = greatest, i.e. x1^k).
int revlex_rank(const Monomial& m);

/// Inverse of revlex_rank at a fixed degree.
Monomial monomial_at_rank(int degree, int rank);

/// A set of monomials of one common degree, kept in strictly decreasing
/// revlex order.
struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(const Monomial& m) const;
};

/// Sorts descending, removes duplicates, and checks every member has the
/// stated degree (throws std::invalid_argument otherwise).
DegreeSlice make_slice(int degree, std::vector<Monomial> members);

/// All C(k+2,2) monomials of degree k, decreasing revlex.
DegreeSlice monomials_of_degree(int k);

/// Shad(slice) = {x_i * u : 1 <= i <= 3, u in slice}, deduplicated, one
/// degree up.
DegreeSlice shadow(const DegreeSlice& slice);

}  // namespace gin3

#include "gin3/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gin3 {

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    const int a = e[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += static_cast<char>('1' + i);
    if (a > 1) {
      s += '^';
      s += std::to_string(a);
    }
  }
  return s.empty() ? "1" : s;
}

Ordering revlex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db ? Ordering::greater : Ordering::less;
  // Last nonzero entry of e(a)-e(b) negative <=> a greater.
  for (int i = 2; i >= 0; --i) {
    const int diff = a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)];
    if (diff != 0) return diff < 0 ? Ordering::greater : Ordering::less;
  }
  return Ordering::equal;
}

bool revlex_greater(const Monomial& a, const Monomial& b) {
  return revlex_compare(a, b) == Ordering::greater;
}

long long slice_size(int k) {
  if (k < 0) return 0;
  return static_cast<long long>(k + 2) * (k + 1) / 2;
}

// The decreasing-revlex listing of a degree-k slice enumerates the x3
// exponent c ascending, then the x2 exponent b ascending; both loops agree
// with the order because a larger last nonzero difference entry means a
// smaller monomial.
int revlex_rank(const Monomial& m) {
  const int k = m.degree();
  const int c = m.e[2];
  const int b = m.e[1];
  return c * (k + 1) - c * (c - 1) / 2 + b;
}

Monomial monomial_at_rank(int degree, int rank) {
  int c = 0;
  int offset = 0;
  while (true) {
    const int row = degree - c + 1;  // monomials with this x3 exponent
    if (rank < offset + row) break;
    offset += row;
    ++c;
  }
  const int b = rank - offset;
  return Monomial{{degree - c - b, b, c}};
}

bool DegreeSlice::contains(const Monomial& m) const {
  return std::binary_search(members.begin(), members.end(), m, RevlexGreater{});
}

DegreeSlice make_slice(int degree, std::vector<Monomial> members) {
  for (const Monomial& m : members) {
    if (m.degree() != degree) throw std::invalid_argument("make_slice: degree mismatch");
  }
  std::sort(members.begin(), members.end(), RevlexGreater{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return DegreeSlice{degree, std::move(members)};
}

DegreeSlice monomials_of_degree(int k) {
  if (k < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
  std::vector<Monomial> ms;
  ms.reserve(static_cast<std::size_t>(slice_size(k)));
  for (int c = 0; c <= k; ++c)
    for (int b = 0; b + c <= k; ++b) ms.push_back(Monomial{{k - b - c, b, c}});
  return DegreeSlice{k, std::move(ms)};
}

DegreeSlice shadow(const DegreeSlice& slice) {
  std::vector<Monomial> out;
  out.reserve(3 * slice.size());
  for (const Monomial& u : slice.members)
    for (int i = 0; i < 3; ++i) out.push_back(u.times_var(i));
  return make_slice(slice.degree + 1, std::move(out));
}

}  // namespace gin3

#include <doctest.h>

#include "gin3/monomial.hpp"
#include "test_helpers.hpp"

using namespace gin3;
using test::brute_force_slice;
using test::random_monomial;
using test::reference_compare;

namespace {
Monomial m(int a, int b, int c) { return Monomial{{a, b, c}}; }
}  // namespace

TEST_CASE("revlex comparison on pinned pairs") {
  CHECK(revlex_compare(m(2, 0, 0), m(1, 1, 0)) == Ordering::greater);  // x1^2 > x1*x2
  // x2^2 vs x1*x3: difference (-1,2,-1), last nonzero entry negative.
  CHECK(revlex_compare(m(0, 2, 0), m(1, 0, 1)) == Ordering::greater);
  CHECK(revlex_compare(m(1, 1, 0), m(1, 1, 0)) == Ordering::equal);
  // graded: any degree-3 monomial beats any degree-2 monomial
  CHECK(revlex_compare(m(0, 0, 3), m(2, 0, 0)) == Ordering::greater);
  // x1*x2^6 > x2^7 > x2^6*x3
  CHECK(revlex_greater(m(1, 6, 0), m(0, 7, 0)));
  CHECK(revlex_greater(m(0, 7, 0), m(0, 6, 1)));
}

TEST_CASE("revlex is a total order agreeing with the reference formulation") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 2000; ++iter) {
    const Monomial a = random_monomial(rng, 6);
    const Monomial b = random_monomial(rng, 6);
    const Monomial c = random_monomial(rng, 6);
    CHECK(revlex_compare(a, b) == reference_compare(a, b));
    // antisymmetry
    const Ordering ab = revlex_compare(a, b);
    const Ordering ba = revlex_compare(b, a);
    if (ab == Ordering::equal) {
      CHECK(a == b);
      CHECK(ba == Ordering::equal);
    } else {
      CHECK(ab != ba);
    }
    // transitivity on a sorted triple
    std::array<Monomial, 3> v{a, b, c};
    std::sort(v.begin(), v.end(), RevlexGreater{});
    CHECK(!revlex_greater(v[2], v[0]));
  }
}

TEST_CASE("sorting a slice is idempotent") {
  std::vector<Monomial> once = monomials_of_degree(7).members;
  std::vector<Monomial> twice = once;
  std::sort(twice.begin(), twice.end(), RevlexGreater{});
  CHECK(once == twice);
}

TEST_CASE("monomials_of_degree") {
  CHECK(monomials_of_degree(0).members == std::vector<Monomial>{m(0, 0, 0)});
  CHECK(monomials_of_degree(1).members == std::vector<Monomial>{m(1, 0, 0), m(0, 1, 0), m(0, 0, 1)});
  const DegreeSlice s2 = monomials_of_degree(2);
  CHECK(s2.size() == 6);
  CHECK(s2.members.front() == m(2, 0, 0));
  CHECK(s2.members.back() == m(0, 0, 2));
  for (int k = 0; k <= 12; ++k) {
    CHECK(static_cast<long long>(monomials_of_degree(k).size()) == slice_size(k));
    CHECK(monomials_of_degree(k).members == brute_force_slice(k));
  }
}

TEST_CASE("rank round-trips within a slice") {
  for (int k = 0; k <= 14; ++k) {
    int r = 0;
    for (const Monomial& u : monomials_of_degree(k).members) {
      CHECK(revlex_rank(u) == r);
      CHECK(monomial_at_rank(k, r) == u);
      ++r;
    }
  }
}

TEST_CASE("shadow on pinned slices") {
  const DegreeSlice s = make_slice(2, {m(2, 0, 0), m(1, 1, 0)});
  const DegreeSlice sh = shadow(s);
  CHECK(sh.degree == 3);
  CHECK(sh.members == std::vector<Monomial>{m(3, 0, 0), m(2, 1, 0), m(1, 2, 0), m(2, 0, 1),
                                            m(1, 1, 1)});
  CHECK(shadow(DegreeSlice{4, {}}).empty());
  const DegreeSlice pure = shadow(make_slice(5, {m(0, 0, 5)}));
  CHECK(pure.members == std::vector<Monomial>{m(1, 0, 5), m(0, 1, 5), m(0, 0, 6)});
}

TEST_CASE("shadow size bound and union additivity") {
  SplitMix64 rng(77);
  for (int iter = 0; iter < 1000; ++iter) {
    const int k = 1 + static_cast<int>(rng.below(6));
    const DegreeSlice all = monomials_of_degree(k);
    std::vector<Monomial> picked_a, picked_b;
    for (const Monomial& u : all.members) {
      if (rng.below(3) == 0) picked_a.push_back(u);
      if (rng.below(3) == 0) picked_b.push_back(u);
    }
    const DegreeSlice a = make_slice(k, picked_a);
    const DegreeSlice b = make_slice(k, picked_b);
    CHECK(shadow(a).size() <= 3 * a.size());

    std::vector<Monomial> both = picked_a;
    both.insert(both.end(), picked_b.begin(), picked_b.end());
    const DegreeSlice unions = shadow(make_slice(k, both));
    const DegreeSlice shadow_b = shadow(b);
    std::vector<Monomial> merged = shadow(a).members;
    merged.insert(merged.end(), shadow_b.members.begin(), shadow_b.members.end());
    CHECK(unions.members == make_slice(k + 1, merged).members);
  }
}

TEST_CASE("make_slice rejects mixed degrees") {
  CHECK_THROWS_AS(make_slice(2, {m(1, 0, 0)}), std::invalid_argument);
}

TEST_CASE("text rendering") {
  CHECK(m(0, 0, 0).str() == "1");
  CHECK(m(2, 1, 0).str() == "x1^2*x2");
  CHECK(m(0, 4, 5).str() == "x2^4*x3^5");
}

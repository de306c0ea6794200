#include <doctest.h>

#include <fstream>

#include "gin3/gin.hpp"
#include "gin3/json_io.hpp"
#include "gin3/verify.hpp"

using namespace gin3;

namespace {
Monomial m(int a, int b, int c) { return Monomial{{a, b, c}}; }

json load_fixture(const std::string& name) {
  std::ifstream in(std::string(GIN3_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  json j;
  in >> j;
  return j;
}
}  // namespace

TEST_CASE("greedy gin for (3,3,9)") {
  const GinResult r = construct_gin_greedy(DegreeTriple(3, 3, 9));
  const std::vector<Monomial> expected{
      m(3, 0, 0), m(2, 1, 0),                          // degree 3
      m(1, 3, 0),                                      // degree 4
      m(0, 5, 0),                                      // degree 5
      m(0, 4, 5),                                      // degree 9
      m(1, 2, 7), m(0, 3, 7),                          // degree 10
      m(2, 0, 9), m(1, 1, 9), m(0, 2, 9),              // degree 11
      m(1, 0, 11), m(0, 1, 11),                        // degree 12
      m(0, 0, 13)};                                    // degree 13
  CHECK(r.ideal.generators() == expected);
  CHECK(r.mu() == 13);
}

TEST_CASE("greedy gin for (2,2,2)") {
  const GinResult r = construct_gin_greedy(DegreeTriple(2, 2, 2));
  CHECK(r.ideal.generators() == std::vector<Monomial>{m(2, 0, 0), m(1, 1, 0), m(0, 2, 0),
                                                      m(1, 0, 2), m(0, 1, 2), m(0, 0, 4)});
}

TEST_CASE("greedy gin for (3,4,9) has 16 generators") {
  const GinResult r = construct_gin_greedy(DegreeTriple(3, 4, 9));
  CHECK(r.mu() == 16);
  CHECK(r.ideal.contains(m(0, 5, 4)));   // x2^5*x3^4 is the degree-9 addition
  CHECK(!r.ideal.contains(m(0, 5, 1)));  // not x2^5*x3
}

TEST_CASE("greedy construction is deterministic and permutation-invariant") {
  const GinResult a = construct_gin_greedy(DegreeTriple(4, 5, 6));
  const GinResult b = construct_gin_greedy(DegreeTriple(6, 4, 5));
  const GinResult c = construct_gin_greedy(DegreeTriple(5, 6, 4));
  CHECK(a.ideal == b.ideal);
  CHECK(a.ideal == c.ideal);
}

TEST_CASE("per-degree additions reassemble each slice") {
  const DegreeTriple t(4, 5, 6);
  const GinResult r = construct_gin_greedy(t);
  const std::vector<long long> counts = target_counts(t);
  DegreeSlice slice{0, {}};
  for (int k = 0; k <= t.terminal_degree(); ++k) {
    std::vector<Monomial> members = k == 0 ? std::vector<Monomial>{} : shadow(slice).members;
    if (const auto it = r.new_by_degree.find(k); it != r.new_by_degree.end())
      members.insert(members.end(), it->second.begin(), it->second.end());
    slice = make_slice(k, std::move(members));
    CHECK(static_cast<long long>(slice.size()) == counts[static_cast<std::size_t>(k)]);
    CHECK(slice.members == r.ideal.degree_slice(k).members);
  }
  // terminality: the last slice is everything
  CHECK(slice.size() == monomials_of_degree(t.terminal_degree()).size());
}

TEST_CASE("the greedy loop rejects infeasible slice counts") {
  // degree-1 slice of size 3 shadows to >= 4 monomials in degree 2
  CHECK_THROWS_AS(almost_revlex_from_counts({0, 3, 1}), std::logic_error);
  CHECK_THROWS_AS(almost_revlex_from_counts({0, 99}), std::logic_error);
}

TEST_CASE("closed-form expansion matches greedy everywhere up to 10") {
  for (const DegreeTriple& t : enumerate_triples(10)) {
    const GinResult greedy = construct_gin_greedy(t);
    const GinResult corrected = construct_gin_closed_form(t);
    CHECK(corrected.ideal == greedy.ideal);
  }
}

TEST_CASE("raw closed-form differs from greedy exactly on the catalogued cases") {
  const json catalogue = load_fixture("closed_form_corrections.json");
  CHECK(catalogue.at("template_corrections").size() == 4);
  for (const DegreeTriple& t : enumerate_triples(10)) {
    const bool differs =
        !(construct_gin_closed_form(t, TemplateForm::raw).ideal == construct_gin_greedy(t).ideal);
    const CaseTag tag = classify_case(t);
    bool catalogued = false;
    if (tag == CaseTag::II_eq_eq && t.d1() % 2 == 1) catalogued = true;
    if (tag == CaseTag::II_eq_lt && t.d3() % 2 == 0 && 2 * t.d1() - t.d3() >= 4) catalogued = true;
    if (tag == CaseTag::II_lt_eq && t.d1() % 2 == 0) catalogued = true;
    CHECK(differs == catalogued);
  }
}

TEST_CASE("generator counts by case") {
  CHECK(generator_count(DegreeTriple(3, 3, 9)) == 13);
  CHECK(generator_count(DegreeTriple(3, 4, 9)) == 16);
  CHECK(generator_count(DegreeTriple(5, 5, 5)) == 25);
  CHECK(generator_count(DegreeTriple(6, 6, 6)) == 34);
  CHECK(generator_count(DegreeTriple(4, 4, 6)) == 20);
  CHECK(generator_count(DegreeTriple(4, 4, 5)) == 19);
  CHECK(generator_count(DegreeTriple(4, 6, 6)) == 25);
  CHECK(generator_count(DegreeTriple(3, 6, 6)) == 20);
  CHECK(generator_count(DegreeTriple(4, 5, 6)) == 23);  // alpha = 3 odd
  CHECK(generator_count(DegreeTriple(3, 5, 6)) == 18);  // alpha = 2 even
}

TEST_CASE("mu bound") {
  const DegreeTriple tight(3, 3, 9);
  CHECK(mu_bound_check(tight, construct_gin_greedy(tight).ideal));  // 13 <= 13
  const DegreeTriple small(2, 2, 2);
  CHECK(mu_bound_check(small, construct_gin_greedy(small).ideal));  // 6 <= 7
  const DegreeTriple mid(4, 5, 6);
  CHECK(mu_bound_check(mid, construct_gin_greedy(mid).ideal));  // 23 <= 25
}

TEST_CASE("reference fixture round-trips through JSON") {
  const json fixture = load_fixture("reference_gins.json");
  for (const json& entry : fixture.at("entries")) {
    const auto d = entry.at("degrees");
    const DegreeTriple t(d[0].get<int>(), d[1].get<int>(), d[2].get<int>());
    const MonomialIdeal expected = ideal_from_json(entry);
    const GinResult greedy = construct_gin_greedy(t);
    CHECK(greedy.ideal == expected);
    CHECK(greedy.mu() == entry.at("mu").get<std::size_t>());
    // serialize and parse back
    CHECK(ideal_from_json(to_json(greedy)) == expected);
  }
}

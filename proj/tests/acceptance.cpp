// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gin3/json_io.hpp"
#include "gin3/lefschetz.hpp"
#include "gin3/verify.hpp"
#include "test_helpers.hpp"

using namespace gin3;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string name)
      : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      problems_.push_back(what);
    }
  }

  void finish() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (problems_.empty()) {
      std::printf("[PASS] %s (%.2fs)\n", name_.c_str(), secs);
    } else {
      ++failures;
      std::printf("[FAIL] %s (%.2fs)\n", name_.c_str(), secs);
      for (const std::string& p : problems_) std::printf("       - %s\n", p.c_str());
    }
  }

 private:
  std::string name_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

std::string triple_str(const DegreeTriple& t) {
  return "(" + std::to_string(t.d1()) + "," + std::to_string(t.d2()) + "," +
         std::to_string(t.d3()) + ")";
}

Monomial m(int a, int b, int c) { return Monomial{{a, b, c}}; }

// 1. The curated reference generator lists are reproduced exactly, and the
//    corrected closed-form expansion agrees with the greedy construction.
void criterion_reference_fidelity() {
  Criterion c("1 reference-list fidelity (10 curated triples, exact set equality)");
  std::ifstream in(std::string(GIN3_FIXTURE_DIR) + "/reference_gins.json");
  c.expect(static_cast<bool>(in), "fixture reference_gins.json missing");
  if (in) {
    json fixture;
    in >> fixture;
    const auto& entries = fixture.at("entries");
    c.expect(entries.size() == 10, "expected 10 reference entries");
    for (const json& entry : entries) {
      const auto& d = entry.at("degrees");
      const DegreeTriple t(d[0].get<int>(), d[1].get<int>(), d[2].get<int>());
      const MonomialIdeal expected = ideal_from_json(entry);
      const GinResult greedy = construct_gin_greedy(t);
      c.expect(greedy.ideal == expected, triple_str(t) + " greedy != reference list");
      c.expect(greedy.mu() == entry.at("mu").get<std::size_t>(),
               triple_str(t) + " generator count");
      c.expect(construct_gin_closed_form(t).ideal == expected,
               triple_str(t) + " corrected closed form != reference list");
    }
  }
  c.finish();
}

// 2. For every triple with d_i <= 10 the greedy generator count equals the
//    case-appropriate closed-form count; any mismatch must be adjudicated
//    by the Groebner oracle in favour of the greedy count.
void criterion_generator_counts() {
  Criterion c("2 generator-count closed forms (165 triples, discrepancies oracle-adjudicated)");
  int mismatches = 0;
  for (const DegreeTriple& t : enumerate_triples(10)) {
    const long long greedy = static_cast<long long>(construct_gin_greedy(t).mu());
    const long long closed = generator_count(t);
    if (greedy == closed) continue;
    ++mismatches;
    const OracleVerdict v = oracle_compare(t, 1);
    c.expect(v.hilbert_gate && v.match,
             triple_str(t) + " count mismatch not confirmed by the oracle (closed-form " +
                 std::to_string(closed) + ", greedy " + std::to_string(greedy) + ")");
  }
  c.expect(mismatches == 0,
           "discrepancy catalogue is non-empty: " + std::to_string(mismatches) + " triples");
  c.finish();
}

// 3. Structural suite over all 165 triples.
void criterion_structural_suite() {
  Criterion c("3 structural suite (165 triples: stable, almost-revlex, Hilbert, SLP, mu)");
  const std::vector<DegreeTriple> triples = enumerate_triples(10);
  std::vector<std::string> problems(triples.size());
  parallel_for_index(triples.size(), 0, [&](std::size_t i) {
    const DegreeTriple& t = triples[i];
    const GinResult gin = construct_gin_greedy(t);
    const MonomialIdeal& J = gin.ideal;
    std::string bad;
    if (!is_strongly_stable(J)) bad += " strongly-stable";
    if (!is_almost_revlex(J)) bad += " almost-revlex";
    const HilbertTable series = ci_hilbert_series(t);
    const std::vector<long long> h = quotient_hilbert(J, t.terminal_degree());
    long long total = 0;
    for (int k = 0; k <= t.terminal_degree(); ++k) {
      if (h[static_cast<std::size_t>(k)] != series.at(k)) {
        bad += " hilbert@k=" + std::to_string(k);
        break;
      }
      total += h[static_cast<std::size_t>(k)];
    }
    if (total != t.total_dimension()) bad += " total-dimension";
    for (int k = 0; k <= t.socle_degree(); ++k)
      if (series.at(k) != series.at(t.socle_degree() - k)) {
        bad += " symmetry";
        break;
      }
    if (!is_strong_lefschetz_x3(J).holds) bad += " lefschetz";
    if (!mu_bound_check(t, J)) bad += " mu-bound";
    if (!bad.empty()) problems[i] = triple_str(t) + ":" + bad;
  });
  for (const std::string& p : problems)
    if (!p.empty()) c.expect(false, p);
  c.finish();
}

// 4. Oracle equivalence at desk scale: d1+d2+d3 <= 12, seeds 1..5, p=32003.
void criterion_oracle_equivalence() {
  Criterion c("4 oracle equivalence (d1+d2+d3 <= 12, 5 seeds each, p=32003)");
  std::vector<DegreeTriple> triples;
  for (const DegreeTriple& t : enumerate_triples(8))
    if (t.d1() + t.d2() + t.d3() <= 12) triples.push_back(t);
  std::vector<std::string> problems(triples.size() * 5);
  parallel_for_index(problems.size(), 0, [&](std::size_t i) {
    const DegreeTriple& t = triples[i / 5];
    const std::uint64_t seed = 1 + i % 5;
    const OracleVerdict v = oracle_compare(t, seed);
    if (!(v.hilbert_gate && v.match))
      problems[i] = triple_str(t) + " seed " + std::to_string(seed) +
                    (v.exhausted ? " exhausted retries" : " mismatch");
  });
  int runs = 0;
  for (const std::string& p : problems) {
    ++runs;
    if (!p.empty()) c.expect(false, p);
  }
  c.expect(runs == static_cast<int>(triples.size()) * 5, "run count");
  c.finish();
}

// 5. Negative controls keep their exact verdicts.
void criterion_negative_controls() {
  Criterion c("5 negative controls (stable-not-almost-revlex, unrotated CI, SLP failure)");

  const MonomialIdeal stable_only =
      MonomialIdeal::minimalize({m(2, 0, 0), m(1, 1, 0), m(0, 3, 0), m(1, 0, 2)});
  c.expect(is_strongly_stable(stable_only), "witness ideal should be strongly stable");
  c.expect(!is_almost_revlex(stable_only), "witness ideal should not be almost revlex");

  OracleConfig config;
  config.coordinate_change = false;
  config.monomial_inputs = true;
  const OracleVerdict v = oracle_compare(DegreeTriple(2, 2, 2), 1, config);
  c.expect(v.computed.generator_count() == 3, "unrotated monomial CI should have 3 generators");
  c.expect(v.predicted.generator_count() == 6, "predicted Gin(2,2,2) should have 6 generators");
  c.expect(!v.match, "unrotated monomial CI must not match the prediction");

  const MonomialIdeal K = MonomialIdeal::minimalize({m(1, 0, 0), m(0, 2, 0), m(0, 0, 3)});
  const LefschetzResult slp = is_strong_lefschetz_x3(K);
  c.expect(!slp.holds, "(x1, x2^2, x3^3) must fail the strong Lefschetz check");
  c.expect(slp.first_failure && slp.first_failure->first == 0 && slp.first_failure->second == 3,
           "first failure must be (t,b) = (0,3)");
  c.expect(is_weak_lefschetz_x3(K).holds, "(x1, x2^2, x3^3) keeps the weak Lefschetz property");
  c.finish();
}

// 6. Randomized property suites, >= 10^3 cases per property.
void criterion_property_suites() {
  Criterion c("6 property suites (order, shadows, s-pair reduction, field axioms; >=1000 each)");

  {  // total order
    SplitMix64 rng(606);
    int cases = 0;
    for (int i = 0; i < 1200; ++i) {
      const Monomial a = test::random_monomial(rng, 7);
      const Monomial b = test::random_monomial(rng, 7);
      const Monomial w = test::random_monomial(rng, 7);
      const Ordering ab = revlex_compare(a, b);
      if (ab == Ordering::equal && !(a == b)) c.expect(false, "order: equal but distinct");
      if (ab != Ordering::equal && revlex_compare(b, a) == ab)
        c.expect(false, "order: antisymmetry");
      std::array<Monomial, 3> v{a, b, w};
      std::sort(v.begin(), v.end(), RevlexGreater{});
      if (revlex_greater(v[2], v[0])) c.expect(false, "order: transitivity");
      ++cases;
    }
    c.expect(cases >= 1000, "order case count");
  }

  {  // shadow closure inside ideals
    SplitMix64 rng(707);
    int cases = 0;
    for (int i = 0; i < 250; ++i) {
      const MonomialIdeal J = test::random_ideal(rng);
      for (int k = 0; k <= 7; ++k) {
        for (const Monomial& u : shadow(J.degree_slice(k)).members)
          if (!J.contains(u)) c.expect(false, "shadow escapes the ideal");
        ++cases;
      }
    }
    c.expect(cases >= 1000, "shadow case count");
  }

  {  // Buchberger: s-pairs of the truncated basis reduce to zero
    const PrimeField F(32003);
    SplitMix64 rng(909);
    int pair_checks = 0;
    while (pair_checks < 1000) {
      const DegreeTriple t(2 + static_cast<int>(rng.below(2)),
                           2 + static_cast<int>(rng.below(2)),
                           2 + static_cast<int>(rng.below(3)));
      std::vector<SparsePolynomial> polys;
      for (int d : {t.d1(), t.d2(), t.d3()}) polys.push_back(random_homogeneous(d, rng, F));
      const LinearChange g = random_invertible_change(rng, F);
      for (SparsePolynomial& f : polys) f = apply_change(g, f, F);
      const TruncatedBasisResult r = buchberger_initial_ideal(polys, t.terminal_degree(), F);
      for (std::size_t i = 0; i < r.basis.size(); ++i)
        for (std::size_t j = i + 1; j < r.basis.size(); ++j) {
          if (lcm(r.basis[i].leading_monomial(), r.basis[j].leading_monomial()).degree() >
              r.degree_cap)
            continue;
          if (!normal_form(s_polynomial(r.basis[i], r.basis[j], F), r.basis, F).is_zero())
            c.expect(false, "s-polynomial does not reduce to zero");
          ++pair_checks;
        }
    }
    c.expect(pair_checks >= 1000, "s-pair case count");
  }

  {  // field axioms
    const PrimeField F(32003);
    SplitMix64 rng(1010);
    int cases = 0;
    for (int i = 0; i < 10000; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rng.below(32003));
      const std::int64_t b = static_cast<std::int64_t>(rng.below(32003));
      if (F.sub(F.add(a, b), b) != a) c.expect(false, "field: add/sub");
      if (a != 0 && F.mul(a, F.inv(a)) != 1) c.expect(false, "field: inverse");
      if (F.mul(F.add(a, b), 2) != F.add(F.mul(a, 2), F.mul(b, 2)))
        c.expect(false, "field: distributivity");
      ++cases;
    }
    c.expect(cases >= 10000, "field case count");
  }

  c.finish();
}

}  // namespace

int main() {
  criterion_reference_fidelity();
  criterion_generator_counts();
  criterion_structural_suite();
  criterion_oracle_equivalence();
  criterion_negative_controls();
  criterion_property_suites();
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}

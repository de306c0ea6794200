#include "gin3/oracle.hpp"

namespace gin3 {

namespace {

std::vector<SparsePolynomial> draw_system(const DegreeTriple& degrees, const OracleConfig& config,
                                          SplitMix64& rng, const PrimeField& F) {
  std::vector<SparsePolynomial> system;
  const std::array<int, 3> ds{degrees.d1(), degrees.d2(), degrees.d3()};
  for (int i = 0; i < 3; ++i) {
    if (config.monomial_inputs) {
      Monomial m;
      m.e[static_cast<std::size_t>(i)] = ds[static_cast<std::size_t>(i)];
      system.push_back(SparsePolynomial::term(m, 1, F));
    } else {
      system.push_back(random_homogeneous(ds[static_cast<std::size_t>(i)], rng, F));
    }
  }
  if (config.coordinate_change) {
    const LinearChange g = random_invertible_change(rng, F);
    for (SparsePolynomial& f : system) f = apply_change(g, f, F);
  }
  return system;
}

}  // namespace

OracleVerdict oracle_compare(const DegreeTriple& degrees, std::uint64_t seed,
                             const OracleConfig& config) {
  const PrimeField F(config.prime);
  const GinResult prediction = construct_gin_greedy(degrees);
  const HilbertTable series = ci_hilbert_series(degrees);
  const int cap = degrees.terminal_degree();

  OracleVerdict verdict{degrees, F.p(), seed, false, false, 0, false, {}, prediction.ideal};

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt <= config.retry_limit; ++attempt) {
    const TruncatedBasisResult gb =
        buchberger_initial_ideal(draw_system(degrees, config, rng, F), cap, F);
    verdict.computed = gb.initial_ideal;
    verdict.retries = attempt;

    // Regularity/genericity gate: the quotient Hilbert function of the
    // computed initial ideal must equal the complete-intersection series.
    bool gate = gb.artinian_at_cap;
    for (int k = 0; gate && k <= cap; ++k)
      gate = static_cast<long long>(gb.initial_ideal.degree_slice(k).size()) ==
             slice_size(k) - series.at(k);
    if (gate) {
      verdict.hilbert_gate = true;
      verdict.match = gb.initial_ideal == prediction.ideal;
      return verdict;
    }
  }
  verdict.exhausted = true;
  return verdict;
}

}  // namespace gin3

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gin3/gin.hpp"
#include "gin3/lefschetz.hpp"
#include "gin3/oracle.hpp"

namespace gin3 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::optional<DegreeTriple> degrees;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// The six structural checks on the greedy prediction for one triple:
/// strong stability, almost-revlex, Hilbert-function match against the
/// product series, strong Lefschetz for x3, generator count against the
/// closed-form count, and the mu bound.
VerifyReport verify_gin(const DegreeTriple& degrees);

/// Checks applicable to an externally supplied ideal. Without degrees only
/// the order-theoretic predicates run; with degrees the Hilbert match,
/// count and mu bound are added, and the Lefschetz check whenever the
/// quotient is artinian.
VerifyReport verify_ideal(const MonomialIdeal& J, const std::optional<DegreeTriple>& degrees);

/// One catalogued-formula evaluation that failed to reproduce the ground
/// truth (product series / derived counts): either a plain mismatch, a
/// non-integral value, or an index no piece covers.
struct PiecewiseDiscrepancy {
  std::array<int, 3> degrees{};
  std::string formula;  // "hilbert" or "count"
  int k = 0;
  bool covered = true;
  bool integral = true;
  long long formula_value = 0;
  long long truth = 0;
};

/// Closed-form count disagreeing with the greedy generator count; the
/// greedy value is authoritative and mismatches are adjudicated by one
/// oracle run.
struct CountMismatch {
  std::array<int, 3> degrees{};
  std::string case_tag;
  long long closed_form = 0;
  long long greedy = 0;
  bool oracle_confirmed_greedy = false;
  std::uint64_t oracle_seed = 0;
};

/// Set difference between a template expansion and the greedy ideal.
struct ClosedFormDiff {
  std::array<int, 3> degrees{};
  std::string form;  // "raw" or "corrected"
  std::vector<Monomial> missing;  // greedy generators the template lacks
  std::vector<Monomial> extra;    // template generators the greedy ideal lacks
};

struct TripleReport {
  std::array<int, 3> degrees{};
  std::string case_tag;
  long long mu = 0;
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

struct SweepOptions {
  int max_degree = 6;
  bool counts_only = false;
  /// Run the Groebner oracle for triples with d1+d2+d3 <= oracle_sum_max.
  bool with_oracle = false;
  int oracle_sum_max = 12;
  std::vector<std::uint64_t> oracle_seeds{1};
  std::int64_t prime = 32003;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct OracleRow {
  std::array<int, 3> degrees{};
  std::uint64_t seed = 0;
  bool match = false;
  bool exhausted = false;
  int retries = 0;
};

struct SweepReport {
  int max_degree = 0;
  std::vector<TripleReport> triples;
  std::vector<PiecewiseDiscrepancy> piecewise;
  std::vector<CountMismatch> count_mismatches;
  std::vector<ClosedFormDiff> closed_form_diffs;
  std::vector<OracleRow> oracle_rows;
  bool all_structural_passed = false;
  bool all_oracle_matched = true;
};

/// All sorted triples with 2 <= d1 <= d2 <= d3 <= max_degree.
std::vector<DegreeTriple> enumerate_triples(int max_degree);

/// Runs the verification pipeline over every triple up to the bound,
/// collecting the discrepancy catalogues. Triples run in parallel; the
/// assembled report is ordered by triple regardless of scheduling.
SweepReport run_sweep(const SweepOptions& options);

/// Deterministic-order parallel map helper used by the sweep.
void parallel_for_index(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace gin3

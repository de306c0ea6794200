#include "gin3/json_io.hpp"

namespace gin3 {

json to_json(const Monomial& m) { return json::array({m.e[0], m.e[1], m.e[2]}); }

Monomial monomial_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("monomial: expected an [a,b,c] exponent triple");
  Monomial m;
  for (int i = 0; i < 3; ++i) {
    const int a = j[static_cast<std::size_t>(i)].get<int>();
    if (a < 0) throw std::invalid_argument("monomial: negative exponent");
    m.e[static_cast<std::size_t>(i)] = a;
  }
  return m;
}

json to_json(const MonomialIdeal& J) {
  json gens = json::array();
  for (const Monomial& g : J.generators()) gens.push_back(to_json(g));
  return json{{"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
  const json* gens = nullptr;
  if (j.is_array()) {
    gens = &j;
  } else if (j.is_object() && j.contains("generators")) {
    gens = &j.at("generators");
  } else {
    throw std::invalid_argument("ideal: expected {\"generators\": [[a,b,c], ...]}");
  }
  std::vector<Monomial> ms;
  for (const json& g : *gens) ms.push_back(monomial_from_json(g));
  return MonomialIdeal::minimalize(std::move(ms));
}

namespace {

json degrees_json(const DegreeTriple& t) { return json::array({t.d1(), t.d2(), t.d3()}); }

}  // namespace

json hilbert_to_json(const DegreeTriple& degrees) {
  const HilbertTable table = ci_hilbert_series(degrees);
  return json{{"degrees", degrees_json(degrees)},
              {"H", table.values()},
              {"J_counts", target_counts(degrees)}};
}

json to_json(const GinResult& result) {
  json by_degree = json::object();
  for (const auto& [k, gens] : result.new_by_degree) {
    json arr = json::array();
    for (const Monomial& g : gens) arr.push_back(to_json(g));
    by_degree[std::to_string(k)] = arr;
  }
  return json{{"degrees", degrees_json(result.degrees)},
              {"case", to_string(result.case_tag)},
              {"method", result.method == GinMethod::greedy ? "greedy" : "closed-form"},
              {"generators", to_json(result.ideal).at("generators")},
              {"new_by_degree", by_degree},
              {"mu", result.mu()}};
}

json to_json(const OracleVerdict& verdict) {
  return json{{"degrees", degrees_json(verdict.degrees)},
              {"p", verdict.p},
              {"seed", verdict.seed},
              {"hilbert_gate", verdict.hilbert_gate ? "pass" : "fail"},
              {"match", verdict.match},
              {"retries", verdict.retries},
              {"exhausted", verdict.exhausted},
              {"computed_generators", to_json(verdict.computed).at("generators")},
              {"predicted_generators", to_json(verdict.predicted).at("generators")}};
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out{{"checks", checks}, {"all_passed", report.all_passed()}};
  if (report.degrees) out["degrees"] = degrees_json(*report.degrees);
  return out;
}

json to_json(const MapRankReport& r) {
  const char* verdict = r.verdict == MapVerdict::both         ? "both"
                        : r.verdict == MapVerdict::injective  ? "injective"
                        : r.verdict == MapVerdict::surjective ? "surjective"
                                                              : "neither";
  return json{{"t", r.t},
              {"b", r.b},
              {"source_dim", r.source_dim},
              {"target_dim", r.target_dim},
              {"rank", r.rank},
              {"verdict", verdict}};
}

json to_json(const SweepReport& report) {
  json triples = json::array();
  for (const TripleReport& row : report.triples) {
    json checks = json::array();
    for (const CheckResult& c : row.checks)
      checks.push_back(json{{"name", c.name}, {"passed", c.passed}});
    triples.push_back(json{{"degrees", row.degrees},
                           {"case", row.case_tag},
                           {"mu", row.mu},
                           {"all_passed", row.all_passed},
                           {"checks", checks}});
  }
  json piecewise = json::array();
  for (const PiecewiseDiscrepancy& d : report.piecewise)
    piecewise.push_back(json{{"degrees", d.degrees},
                             {"formula", d.formula},
                             {"k", d.k},
                             {"covered", d.covered},
                             {"integral", d.integral},
                             {"formula_value", d.formula_value},
                             {"truth", d.truth}});
  json mism = json::array();
  for (const CountMismatch& m : report.count_mismatches)
    mism.push_back(json{{"degrees", m.degrees},
                        {"case", m.case_tag},
                        {"closed_form", m.closed_form},
                        {"greedy", m.greedy},
                        {"oracle_confirmed_greedy", m.oracle_confirmed_greedy},
                        {"oracle_seed", m.oracle_seed}});
  json diffs = json::array();
  for (const ClosedFormDiff& d : report.closed_form_diffs) {
    json missing = json::array(), extra = json::array();
    for (const Monomial& m : d.missing) missing.push_back(to_json(m));
    for (const Monomial& m : d.extra) extra.push_back(to_json(m));
    diffs.push_back(json{{"degrees", d.degrees},
                         {"form", d.form},
                         {"missing", missing},
                         {"extra", extra}});
  }
  json oracle = json::array();
  for (const OracleRow& r : report.oracle_rows)
    oracle.push_back(json{{"degrees", r.degrees},
                          {"seed", r.seed},
                          {"match", r.match},
                          {"exhausted", r.exhausted},
                          {"retries", r.retries}});
  return json{{"max_degree", report.max_degree},
              {"triple_count", report.triples.size()},
              {"triples", triples},
              {"piecewise_discrepancies", piecewise},
              {"count_mismatches", mism},
              {"closed_form_diffs", diffs},
              {"oracle", oracle},
              {"all_structural_passed", report.all_structural_passed},
              {"all_oracle_matched", report.all_oracle_matched}};
}

}  // namespace gin3

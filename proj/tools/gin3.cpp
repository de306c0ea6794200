// gin3: predicted generic initial ideals of artinian complete intersections
// in three variables, with structural verification and a finite-field
// Groebner cross-check.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gin3/json_io.hpp"
#include "gin3/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleExhausted = 3;

struct DegreesOption {
  std::vector<int> values;

  gin3::DegreeTriple parse() const {
    if (values.size() != 3)
      throw std::invalid_argument("expected exactly three degrees (e.g. --degrees 3,3,9)");
    gin3::DegreeTriple t(values[0], values[1], values[2]);
    if (t.was_unsorted())
      std::cerr << "note: degrees sorted to (" << t.d1() << "," << t.d2() << "," << t.d3()
                << "); the predicted ideal depends only on the multiset\n";
    return t;
  }
};

// Seed lists come as "7", "1,2,5" or a range "1..5".
std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> seeds;
  const auto range_pos = spec.find("..");
  if (range_pos != std::string::npos) {
    const std::uint64_t lo = std::stoull(spec.substr(0, range_pos));
    const std::uint64_t hi = std::stoull(spec.substr(range_pos + 2));
    if (hi < lo) throw std::invalid_argument("seed range is empty: " + spec);
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string tok = spec.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) seeds.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (seeds.empty()) throw std::invalid_argument("no seeds in: " + spec);
  return seeds;
}

gin3::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  gin3::json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const gin3::json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string paper_style(const gin3::Monomial& m) {
  std::string s = m.str();
  std::string out;
  for (char c : s)
    if (c != '*') out += c;
  return out;
}

void print_gin_text(const gin3::GinResult& r) {
  std::cout << "degrees (" << r.degrees.d1() << "," << r.degrees.d2() << "," << r.degrees.d3()
            << ")  case " << to_string(r.case_tag) << "  mu=" << r.mu() << "\n";
  for (const auto& [k, gens] : r.new_by_degree) {
    std::cout << "  degree " << k << ":";
    for (const gin3::Monomial& g : gens) std::cout << " " << paper_style(g);
    std::cout << "\n";
  }
}

// Optional catalogue of known template corrections (env GIN3_FIXTURES).
std::optional<gin3::json> load_corrections_catalogue() {
  const char* path = std::getenv("GIN3_FIXTURES");
  if (!path || !*path) return std::nullopt;
  try {
    return load_json_file(path);
  } catch (const std::exception& e) {
    std::cerr << "warning: GIN3_FIXTURES: " << e.what() << "\n";
    return std::nullopt;
  }
}

int run_predict(const DegreesOption& degrees_opt, bool compare_closed_form,
                const std::string& format) {
  const gin3::DegreeTriple degrees = degrees_opt.parse();
  const gin3::GinResult greedy = gin3::construct_gin_greedy(degrees);
  gin3::json out = gin3::to_json(greedy);

  if (compare_closed_form) {
    const gin3::GinResult raw = gin3::construct_gin_closed_form(degrees, gin3::TemplateForm::raw);
    const gin3::GinResult corrected =
        gin3::construct_gin_closed_form(degrees, gin3::TemplateForm::corrected);
    gin3::json cmp{{"raw_matches", raw.ideal == greedy.ideal},
                   {"corrected_matches", corrected.ideal == greedy.ideal},
                   {"raw_generators", gin3::to_json(raw.ideal).at("generators")},
                   {"corrected_generators", gin3::to_json(corrected.ideal).at("generators")}};
    if (const auto catalogue = load_corrections_catalogue())
      cmp["corrections_catalogue"] = catalogue->value("template_corrections", gin3::json::array());
    out["closed_form"] = cmp;
  }

  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    print_gin_text(greedy);
    if (compare_closed_form) {
      std::cout << "closed-form raw matches greedy:       "
                << (out["closed_form"]["raw_matches"].get<bool>() ? "yes" : "no") << "\n"
                << "closed-form corrected matches greedy: "
                << (out["closed_form"]["corrected_matches"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const DegreesOption& degrees_opt, const std::string& ideal_file,
               const std::string& format) {
  std::optional<gin3::DegreeTriple> degrees;
  if (!degrees_opt.values.empty()) degrees = degrees_opt.parse();

  gin3::VerifyReport report;
  if (!ideal_file.empty()) {
    const gin3::MonomialIdeal J = gin3::ideal_from_json(load_json_file(ideal_file));
    report = gin3::verify_ideal(J, degrees);
  } else if (degrees) {
    report = gin3::verify_gin(*degrees);
  } else {
    throw std::invalid_argument("verify needs --degrees and/or --ideal-file");
  }

  if (format == "json") {
    std::cout << gin3::to_json(report).dump(2) << "\n";
  } else {
    for (const gin3::CheckResult& c : report.checks)
      std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    std::cout << (report.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

int run_oracle(const DegreesOption& degrees_opt, const std::string& seeds_spec,
               std::int64_t prime, int retry_limit, bool no_coordinate_change,
               bool monomial_inputs, const std::string& format) {
  const gin3::DegreeTriple degrees = degrees_opt.parse();
  const std::vector<std::uint64_t> seeds = parse_seeds(seeds_spec);
  gin3::OracleConfig config;
  config.prime = prime;
  config.retry_limit = retry_limit;
  config.coordinate_change = !no_coordinate_change;
  config.monomial_inputs = monomial_inputs;
  if (config.small_modulus_warning())
    std::cerr << "warning: modulus " << prime
              << " is small; spurious initial-ideal degenerations become likely\n";

  bool all_match = true;
  bool any_exhausted = false;
  gin3::json rows = gin3::json::array();
  for (const std::uint64_t seed : seeds) {
    const gin3::OracleVerdict v = gin3::oracle_compare(degrees, seed, config);
    all_match = all_match && v.match;
    any_exhausted = any_exhausted || v.exhausted;
    if (format == "json") {
      rows.push_back(gin3::to_json(v));
    } else {
      std::cout << "seed " << seed << ": gate=" << (v.hilbert_gate ? "pass" : "FAIL")
                << " match=" << (v.match ? "yes" : "NO") << " retries=" << v.retries
                << (v.exhausted ? " (retry limit exhausted)" : "") << "\n";
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  if (any_exhausted) return kExitOracleExhausted;
  return all_match ? kExitOk : kExitCheckFailure;
}

int run_sweep(int max_degree, bool counts_only, bool with_oracle, int oracle_sum_max,
              const std::string& seeds_spec, std::int64_t prime, unsigned threads,
              const std::string& out_path, const std::string& fixtures_dir,
              const std::string& format) {
  gin3::SweepOptions options;
  options.max_degree = max_degree;
  options.counts_only = counts_only;
  options.with_oracle = with_oracle;
  options.oracle_sum_max = oracle_sum_max;
  options.oracle_seeds = parse_seeds(seeds_spec);
  options.prime = prime;
  options.threads = threads;

  const gin3::SweepReport report = gin3::run_sweep(options);
  const gin3::json j = gin3::to_json(report);
  if (!out_path.empty()) write_json_file(out_path, j);
  if (!fixtures_dir.empty()) {
    write_json_file(fixtures_dir + "/piecewise_discrepancies.json",
                    j.at("piecewise_discrepancies"));
    write_json_file(fixtures_dir + "/closed_form_template_diffs.json",
                    j.at("closed_form_diffs"));
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.triples.size() << " triples up to degree " << max_degree << "\n";
    if (counts_only) {
      for (const gin3::TripleReport& row : report.triples)
        std::cout << "(" << row.degrees[0] << "," << row.degrees[1] << "," << row.degrees[2]
                  << ") " << row.case_tag << " mu=" << row.mu << "\n";
    } else {
      int failures = 0;
      for (const gin3::TripleReport& row : report.triples)
        if (!row.all_passed) {
          ++failures;
          std::cout << "FAIL (" << row.degrees[0] << "," << row.degrees[1] << ","
                    << row.degrees[2] << ")\n";
        }
      std::cout << "structural: " << (report.triples.size() - failures) << "/"
                << report.triples.size() << " passed\n"
                << "piecewise-formula discrepancies catalogued: " << report.piecewise.size()
                << "\n"
                << "closed-form template diffs (raw+corrected): "
                << report.closed_form_diffs.size() << "\n"
                << "generator-count mismatches: " << report.count_mismatches.size() << "\n";
      if (with_oracle)
        std::cout << "oracle rows: " << report.oracle_rows.size() << " (all matched: "
                  << (report.all_oracle_matched ? "yes" : "NO") << ")\n";
    }
  }
  const bool ok = report.all_structural_passed && report.all_oracle_matched;
  return ok ? kExitOk : kExitCheckFailure;
}

int run_hilbert(const DegreesOption& degrees_opt, const std::string& format) {
  const gin3::DegreeTriple degrees = degrees_opt.parse();
  const gin3::json j = gin3::hilbert_to_json(degrees);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k    H(A,k)  |J_k|\n";
    const auto& h = j.at("H");
    const auto& counts = j.at("J_counts");
    for (std::size_t k = 0; k < counts.size(); ++k)
      std::cout << k << "    " << (k < h.size() ? h[k].get<long long>() : 0) << "       "
                << counts[k].get<long long>() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic initial ideals of complete intersections in K[x1,x2,x3]"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  DegreesOption degrees;
  std::string seeds_spec = "1";
  std::int64_t prime = 32003;
  std::string ideal_file;
  bool compare_closed_form = false;
  bool no_coordinate_change = false;
  bool monomial_inputs = false;
  int max_degree = 6;
  bool counts_only = false;
  bool with_oracle = false;
  int oracle_sum_max = 12;
  int retry_limit = 8;
  unsigned threads = 0;
  std::string out_path;
  std::string fixtures_dir;

  CLI::App* predict = app.add_subcommand("predict", "print the predicted Gin for a degree triple");
  predict->fallthrough();
  predict->add_option("--degrees", degrees.values, "d1,d2,d3 (each >= 2)")->delimiter(',')->required();
  predict->add_flag("--compare-closed-form", compare_closed_form,
                    "also expand the closed-form templates and diff them");

  CLI::App* verify = app.add_subcommand("verify", "run the structural checks");
  verify->fallthrough();
  verify->add_option("--degrees", degrees.values, "d1,d2,d3")->delimiter(',');
  verify->add_option("--ideal-file", ideal_file, "JSON file with {\"generators\": [[a,b,c],...]}");

  CLI::App* oracle = app.add_subcommand("oracle", "compare against a Groebner run over F_p");
  oracle->fallthrough();
  oracle->add_option("--degrees", degrees.values, "d1,d2,d3")->delimiter(',')->required();
  oracle->add_option("--seeds", seeds_spec, "seed list: 7 | 1,2,5 | 1..5")->capture_default_str();
  oracle->add_option("--prime", prime, "field modulus")->capture_default_str();
  oracle->add_option("--retry-limit", retry_limit, "extra draws after a failed Hilbert gate")
      ->capture_default_str();
  oracle->add_flag("--no-coordinate-change", no_coordinate_change,
                   "skip the random change of coordinates");
  oracle->add_flag("--monomial", monomial_inputs,
                   "use the monomial regular sequence x1^d1, x2^d2, x3^d3");

  CLI::App* sweep = app.add_subcommand("sweep", "verify every triple up to a degree bound");
  sweep->fallthrough();
  sweep->add_option("--max", max_degree, "upper bound for each d_i")->capture_default_str();
  sweep->add_flag("--counts-only", counts_only, "only tabulate generator counts");
  sweep->add_flag("--with-oracle", with_oracle, "run the Groebner oracle on small triples");
  sweep->add_option("--oracle-sum-max", oracle_sum_max, "oracle triples have d1+d2+d3 <= this")
      ->capture_default_str();
  sweep->add_option("--seeds", seeds_spec, "oracle seeds")->capture_default_str();
  sweep->add_option("--prime", prime, "oracle field modulus")->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads (0 = hardware)");
  sweep->add_option("--out", out_path, "write the full corpus report to this JSON file");
  sweep->add_option("--fixtures-out", fixtures_dir,
                    "emit discrepancy-catalogue fixture files into this directory");

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function and slice targets");
  hilbert->fallthrough();
  hilbert->add_option("--degrees", degrees.values, "d1,d2,d3")->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (predict->parsed()) return run_predict(degrees, compare_closed_form, format);
    if (verify->parsed()) return run_verify(degrees, ideal_file, format);
    if (oracle->parsed())
      return run_oracle(degrees, seeds_spec, prime, retry_limit, no_coordinate_change,
                        monomial_inputs, format);
    if (sweep->parsed())
      return run_sweep(max_degree, counts_only, with_oracle, oracle_sum_max, seeds_spec, prime,
                       threads, out_path, fixtures_dir, format);
    if (hilbert->parsed()) return run_hilbert(degrees, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}

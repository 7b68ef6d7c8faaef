// Command-line front end: local reduction data, quadratic twists, isogeny
// classification, and batch theorem verification over curve corpora.
//
// Exit codes: 0 success / no violations, 1 any non-compliant verdict,
// 2 usage or I/O failure.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "kodaira/corpus.hpp"
#include "kodaira/factorization.hpp"
#include "kodaira/isogeny_catalog.hpp"
#include "kodaira/local_reduction.hpp"
#include "kodaira/theorem_engine.hpp"

using namespace kodaira;
using json = nlohmann::ordered_json;

namespace {

std::vector<CurveRecord> read_records(const std::string& input_path) {
  if (input_path.empty() || input_path == "-") return parse_corpus(std::cin);
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open input file: " << input_path << "\n";
    std::exit(2);
  }
  return parse_corpus(in);
}

json model_json(const WeierstrassModel& m) {
  return json::array({rational_str(m.a1), rational_str(m.a2), rational_str(m.a3),
                      rational_str(m.a4), rational_str(m.a6)});
}

json local_json(const LocalReductionData& d, const ReductionClass& rc) {
  json out;
  out["p"] = d.p.get_str();
  out["kodaira"] = d.kodaira.str();
  out["f"] = d.conductor_exponent;
  out["c"] = d.tamagawa;
  out["v_delta_min"] = d.v_delta_min;
  out["v_c4_min"] = d.v_c4_min.str();
  out["minimal_model"] = model_json(d.minimal_model);
  out["reduction"] = reduction_kind_str(rc.kind);
  out["potential"] = potential_kind_str(rc.potential);
  return out;
}

int run_localdata(const std::string& input_path, const std::string& prime) {
  bool had_error = false;
  for (const auto& rec : read_records(input_path)) {
    json out;
    out["id"] = rec.id;
    if (rec.parse_error) {
      out["parse_error"] = *rec.parse_error;
      had_error = true;
      std::cout << out.dump() << "\n";
      continue;
    }
    try {
      auto m = rec.model();
      auto j = compute_invariants(m).j;
      if (!j) throw SingularModelError();
      out["j"] = rational_str(*j);
      std::vector<Integer> primes;
      if (!prime.empty()) {
        Integer p(prime);
        if (!is_prime(p)) throw std::domain_error("--prime must be a prime number");
        primes.push_back(p);
      } else {
        primes = bad_primes(m);
      }
      json locals = json::array();
      for (const auto& p : primes) {
        auto d = tate_local_data(m, p);
        locals.push_back(local_json(d, reduction_class(d, *j)));
      }
      out["primes"] = std::move(locals);
    } catch (const std::exception& e) {
      out["error"] = e.what();
      had_error = true;
    }
    std::cout << out.dump() << "\n";
  }
  return had_error ? 2 : 0;
}

int run_twist(const std::string& input_path, const std::string& d_str, bool reduce) {
  Integer d(d_str);
  json head;
  if (reduce) {
    Integer r = squarefree_part(d);
    head["d_input"] = d.get_str();
    d = r;
  }
  if (!is_squarefree(d)) {
    std::cerr << "error: twist parameter " << d.get_str()
              << " is not squarefree (pass --reduce to replace it by its squarefree "
                 "part)\n";
    return 2;
  }
  bool had_error = false;
  for (const auto& rec : read_records(input_path)) {
    json out = head;
    out["id"] = rec.id;
    if (rec.parse_error) {
      out["parse_error"] = *rec.parse_error;
      had_error = true;
      std::cout << out.dump() << "\n";
      continue;
    }
    try {
      auto tw = quadratic_twist(rec.model(), d);
      out["d"] = d.get_str();
      out["model"] = model_json(tw);
      out["j"] = rational_str(*compute_invariants(tw).j);
    } catch (const std::exception& e) {
      out["error"] = e.what();
      had_error = true;
    }
    std::cout << out.dump() << "\n";
  }
  return had_error ? 2 : 0;
}

int run_classify(const std::string& input_path, bool dump_catalog) {
  if (dump_catalog) {
    json out = json::array();
    for (const auto& e : isogeny_catalog())
      out.push_back({{"ell", e.ell}, {"j", rational_str(e.j)}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  bool had_error = false;
  for (const auto& rec : read_records(input_path)) {
    json out;
    out["id"] = rec.id;
    if (rec.parse_error) {
      out["parse_error"] = *rec.parse_error;
      had_error = true;
      std::cout << out.dump() << "\n";
      continue;
    }
    try {
      auto j = compute_invariants(rec.model()).j;
      if (!j) throw SingularModelError();
      out["j"] = rational_str(*j);
      out["detected_ells"] = lookup_ell_by_j(*j);
      if (rec.asserted_ell) out["asserted_ell"] = *rec.asserted_ell;
    } catch (const std::exception& e) {
      out["error"] = e.what();
      had_error = true;
    }
    std::cout << out.dump() << "\n";
  }
  return had_error ? 2 : 0;
}

int run_verify(const std::string& input_path) {
  long violations = 0;
  for (const auto& rec : read_records(input_path)) {
    if (rec.parse_error) {
      json out{{"id", rec.id}, {"parse_error", *rec.parse_error}};
      std::cout << out.dump() << "\n";
      continue;
    }
    try {
      auto rep = verdict(rec.model(), rec.asserted_ell, rec.id);
      violations += rep.violation_count();
      std::cout << render_compliance_report(rep) << "\n";
    } catch (const std::exception& e) {
      json out{{"id", rec.id}, {"error", e.what()}};
      std::cout << out.dump() << "\n";
    }
  }
  return violations > 0 ? 1 : 0;
}

int run_scan_cmd(const std::string& input_path, const ScanOptions& options) {
  auto records = read_records(input_path);
  auto report = run_scan(records, options);
  std::cout << render_report(report, options);
  return scan_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local reduction data and isogeny-constraint verification "
               "for elliptic curves over Q"};
  app.require_subcommand(1);
  std::string input_path;
  app.add_option("-i,--input", input_path,
                 "Corpus file (JSON-lines or TSV); '-' or absent reads stdin")
      ->capture_default_str();

  auto* localdata = app.add_subcommand("localdata", "Kodaira type, conductor exponent, "
                                                    "and Tamagawa number per prime");
  std::string prime;
  localdata->add_option("--prime", prime, "Restrict to a single prime");
  localdata->fallthrough();

  auto* twist = app.add_subcommand("twist", "Quadratic twist of each input curve");
  std::string d_str;
  bool reduce = false;
  twist->add_option("--d", d_str, "Twist parameter (nonzero integer)")->required();
  twist->add_flag("--reduce", reduce, "Replace d by its squarefree part first");
  twist->fallthrough();

  auto* classify = app.add_subcommand("classify", "Detect prime-degree isogenies by "
                                                  "j-invariant");
  bool dump_catalog = false;
  classify->add_flag("--dump-catalog", dump_catalog, "Print the j-invariant catalog");
  classify->fallthrough();

  app.add_subcommand("verify", "Full per-curve compliance verdicts")->fallthrough();

  auto* scan = app.add_subcommand("scan", "Batch verification with a summary report");
  ScanOptions options;
  scan->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"json", "tsv"}));
  scan->add_flag("--timestamps", options.timestamps, "Embed a generation timestamp");
  scan->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("localdata")) return run_localdata(input_path, prime);
    if (app.got_subcommand("twist")) return run_twist(input_path, d_str, reduce);
    if (app.got_subcommand("classify")) return run_classify(input_path, dump_catalog);
    if (app.got_subcommand("verify")) return run_verify(input_path);
    if (app.got_subcommand("scan")) return run_scan_cmd(input_path, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

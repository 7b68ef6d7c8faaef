#include "kodaira/corpus.hpp"

#include <chrono>
#include <istream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

namespace kodaira {

using json = nlohmann::ordered_json;

WeierstrassModel CurveRecord::model() const {
  if (parse_error) throw std::runtime_error("CurveRecord: unusable record: " + *parse_error);
  if (a_invariants.size() != 5)
    throw std::runtime_error("CurveRecord: expected 5 a-invariants");
  return WeierstrassModel{parse_rational(a_invariants[0]), parse_rational(a_invariants[1]),
                          parse_rational(a_invariants[2]), parse_rational(a_invariants[3]),
                          parse_rational(a_invariants[4])};
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

CurveRecord parse_json_line(const std::string& line, long lineno) {
  CurveRecord rec;
  try {
    json obj = json::parse(line);
    rec.id = obj.value("id", "line" + std::to_string(lineno));
    if (!obj.contains("a_invariants") || !obj["a_invariants"].is_array() ||
        obj["a_invariants"].size() != 5)
      throw std::runtime_error("a_invariants must be an array of 5 strings");
    for (const auto& a : obj["a_invariants"]) {
      std::string s = a.is_string() ? a.get<std::string>() : a.dump();
      parse_rational(s);  // validate now so scan never sees bad strings
      rec.a_invariants.push_back(s);
    }
    if (obj.contains("asserted_ell") && !obj["asserted_ell"].is_null())
      rec.asserted_ell = obj["asserted_ell"].get<long>();
    if (obj.contains("expected"))
      for (auto& [k, v] : obj["expected"].items())
        rec.expected[Integer(k)] = v.get<std::string>();
  } catch (const std::exception& e) {
    rec.id = rec.id.empty() ? "line" + std::to_string(lineno) : rec.id;
    rec.parse_error = e.what();
  }
  return rec;
}

CurveRecord parse_tsv_line(const std::string& line, long lineno, bool has_ell) {
  CurveRecord rec;
  auto toks = split_ws(line);
  try {
    if (!toks.empty()) rec.id = toks[0];
    if (toks.size() != (has_ell ? 7u : 6u))
      throw std::runtime_error("expected " + std::to_string(has_ell ? 7 : 6) + " columns");
    for (int i = 1; i <= 5; ++i) {
      parse_rational(toks[i]);
      rec.a_invariants.push_back(toks[i]);
    }
    if (has_ell && toks[6] != "-") rec.asserted_ell = std::stol(toks[6]);
  } catch (const std::exception& e) {
    rec.id = rec.id.empty() ? "line" + std::to_string(lineno) : rec.id;
    rec.parse_error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<CurveRecord> parse_corpus(std::istream& in) {
  std::vector<CurveRecord> out;
  std::string line;
  long lineno = 0;
  bool tsv = false, tsv_has_ell = false, format_known = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (!format_known) {
      if (line[first] == '{') {
        tsv = false;
        format_known = true;
      } else {
        auto toks = split_ws(line);
        if (!toks.empty() && toks[0] == "id") {
          tsv = true;
          tsv_has_ell = toks.size() >= 7;
          format_known = true;
          continue;  // header row
        }
        CurveRecord rec;
        rec.id = "line" + std::to_string(lineno);
        rec.parse_error = "unrecognized format (expected JSON object or TSV header)";
        out.push_back(std::move(rec));
        continue;
      }
    }
    out.push_back(tsv ? parse_tsv_line(line, lineno, tsv_has_ell)
                      : parse_json_line(line, lineno));
  }
  return out;
}

namespace {

ScanEntry evaluate(const CurveRecord& rec) {
  ScanEntry entry;
  entry.record = rec;
  if (rec.parse_error) return entry;
  try {
    entry.report = verdict(rec.model(), rec.asserted_ell, rec.id);
  } catch (const std::exception& e) {
    entry.error = e.what();
  }
  return entry;
}

void tally(ScanReport& report) {
  for (const auto& e : report.entries) {
    if (e.record.parse_error || e.error) {
      ++report.parse_errors;
    } else if (e.report->violation_count() > 0) {
      ++report.violations;
    } else {
      bool any_applicable = false;
      for (const auto& pe : e.report->per_prime)
        for (const auto& v : pe.verdicts) any_applicable |= v.applicable;
      if (any_applicable)
        ++report.compliant;
      else
        ++report.not_applicable;
    }
  }
}

}  // namespace

ScanReport run_scan_serial(const std::vector<CurveRecord>& records, const ScanOptions&) {
  ScanReport report;
  report.entries.reserve(records.size());
  for (const auto& rec : records) report.entries.push_back(evaluate(rec));
  tally(report);
  return report;
}

ScanReport run_scan(const std::vector<CurveRecord>& records, const ScanOptions& options) {
  if (options.jobs <= 1) return run_scan_serial(records, options);
  ScanReport report;
  report.entries.resize(records.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(options.jobs)
#endif
  for (long i = 0; i < static_cast<long>(records.size()); ++i)
    report.entries[i] = evaluate(records[i]);
  tally(report);
  return report;
}

int scan_exit_code(const ScanReport& report) { return report.violations > 0 ? 1 : 0; }

namespace {

json verdict_json(const TheoremVerdict& v) {
  json out;
  out["rule"] = v.rule_id;
  out["applicable"] = v.applicable;
  if (v.applicable) {
    out["allowed"] = v.allowed.pattern_strings();
    if (v.allowed.complement) out["allowed_is_complement"] = true;
    out["compliant"] = v.compliant;
  }
  if (v.observed) out["observed"] = v.observed->str();
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json model_json(const WeierstrassModel& m) {
  return json::array({rational_str(m.a1), rational_str(m.a2), rational_str(m.a3),
                      rational_str(m.a4), rational_str(m.a6)});
}

json compliance_json(const ComplianceReport& r) {
  json out;
  out["id"] = r.curve_id;
  out["j"] = rational_str(r.j);
  out["detected_ells"] = r.detected_ells;
  out["violations"] = r.violation_count();
  json primes = json::array();
  for (const auto& pe : r.per_prime) {
    json p;
    p["p"] = pe.p.get_str();
    p["kodaira"] = pe.local.kodaira.str();
    p["f"] = pe.local.conductor_exponent;
    p["c"] = pe.local.tamagawa;
    p["v_delta_min"] = pe.local.v_delta_min;
    p["v_c4_min"] = pe.local.v_c4_min.str();
    p["minimal_model"] = model_json(pe.local.minimal_model);
    p["reduction"] = reduction_kind_str(pe.reduction.kind);
    p["potential"] = potential_kind_str(pe.reduction.potential);
    json vs = json::array();
    for (const auto& v : pe.verdicts) vs.push_back(verdict_json(v));
    p["verdicts"] = vs;
    primes.push_back(std::move(p));
  }
  out["primes"] = std::move(primes);
  return out;
}

std::string tsv_row(const ScanEntry& e) {
  std::ostringstream out;
  if (e.record.parse_error) {
    out << e.record.id << "\tparse-error\t" << *e.record.parse_error;
    return out.str();
  }
  if (e.error) {
    out << e.record.id << "\terror\t" << *e.error;
    return out.str();
  }
  const ComplianceReport& r = *e.report;
  out << r.curve_id << '\t' << (r.violation_count() > 0 ? "violation" : "ok") << '\t'
      << rational_str(r.j) << '\t';
  bool first = true;
  for (long ell : r.detected_ells) {
    if (!first) out << ',';
    out << ell;
    first = false;
  }
  if (first) out << '-';
  for (const auto& pe : r.per_prime)
    out << '\t' << pe.p.get_str() << ':' << pe.local.kodaira.str() << ':'
        << pe.local.conductor_exponent << ':' << pe.local.tamagawa;
  return out.str();
}

}  // namespace

std::string render_compliance_report(const ComplianceReport& report) {
  return compliance_json(report).dump();
}

std::string render_report(const ScanReport& report, const ScanOptions& options) {
  std::ostringstream out;
  if (options.format == "tsv") {
    out << "# " << report.tool_version << '\n';
    if (options.timestamps) {
      auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      out << "# generated " << now << '\n';
    }
    for (const auto& e : report.entries) out << tsv_row(e) << '\n';
    out << "# summary compliant=" << report.compliant << " violations=" << report.violations
        << " not_applicable=" << report.not_applicable << " errors=" << report.parse_errors
        << '\n';
    return out.str();
  }
  json doc;
  doc["tool_version"] = report.tool_version;
  if (options.timestamps) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    doc["generated_at"] = static_cast<long>(now);
  }
  json entries = json::array();
  for (const auto& e : report.entries) {
    if (e.record.parse_error) {
      entries.push_back({{"id", e.record.id}, {"parse_error", *e.record.parse_error}});
    } else if (e.error) {
      entries.push_back({{"id", e.record.id}, {"error", *e.error}});
    } else {
      entries.push_back(compliance_json(*e.report));
    }
  }
  doc["entries"] = std::move(entries);
  doc["summary"] = {{"compliant", report.compliant},
                    {"violations", report.violations},
                    {"not_applicable", report.not_applicable},
                    {"errors", report.parse_errors}};
  out << doc.dump(2) << '\n';
  return out.str();
}

}  // namespace kodaira

// Corpus ingestion and batch verification: JSON-lines / TSV records in,
// deterministic machine-readable reports out.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kodaira/theorem_engine.hpp"

namespace kodaira {

inline constexpr const char* kToolVersion = "kodaira-scan 1.0.0";

struct CurveRecord {
  std::string id;
  std::vector<std::string> a_invariants;  // exact decimal strings, 5 entries
  std::optional<long> asserted_ell;
  std::map<Integer, std::string> expected;  // golden prime -> Kodaira string
  // Set when the input line could not be parsed; the record then carries no
  // usable curve.
  std::optional<std::string> parse_error;

  WeierstrassModel model() const;
};

// JSON-lines (one object per line) or TSV with header "id a1 a2 a3 a4 a6 [ell]".
// Malformed lines become per-line parse-error records, never an abort.
std::vector<CurveRecord> parse_corpus(std::istream& in);

struct ScanOptions {
  int jobs = 1;
  std::string format = "json";  // json | tsv
  bool timestamps = false;
};

struct ScanEntry {
  CurveRecord record;
  std::optional<ComplianceReport> report;
  std::optional<std::string> error;  // e.g. "singular model"
};

struct ScanReport {
  std::string tool_version = kToolVersion;
  std::vector<ScanEntry> entries;  // input order
  long compliant = 0;
  long violations = 0;
  long not_applicable = 0;  // curves with j in {0,1728} or no applicable rule
  long parse_errors = 0;
};

// Deterministic given records and options.  jobs > 1 uses OpenMP; the output
// is byte-identical to the serial run.
ScanReport run_scan(const std::vector<CurveRecord>& records, const ScanOptions& options);

// Serial reference path (also what jobs = 1 uses); kept for testing and the
// benchmark.
ScanReport run_scan_serial(const std::vector<CurveRecord>& records, const ScanOptions& options);

// 0 if no violations, 1 if any verdict is non-compliant.
int scan_exit_code(const ScanReport& report);

std::string render_report(const ScanReport& report, const ScanOptions& options);

// JSON object for one compliance report (shared by verify/scan/localdata).
std::string render_compliance_report(const ComplianceReport& report);

}  // namespace kodaira

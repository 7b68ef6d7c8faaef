// Benchmark: OpenMP scan versus the serial reference on a synthetic corpus.
// Usage: scan-bench [records] [jobs]
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <thread>

#include "kodaira/corpus.hpp"

using namespace kodaira;

namespace {

std::vector<CurveRecord> synthetic_corpus(int n) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coeff(-500, 500);
  std::vector<CurveRecord> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    CurveRecord rec;
    rec.id = "bench" + std::to_string(i);
    for (int k = 0; k < 5; ++k) rec.a_invariants.push_back(std::to_string(coeff(rng)));
    if (compute_invariants(rec.model()).delta == 0) {
      --i;
      continue;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::stoi(argv[1]) : 400;
  int jobs = argc > 2 ? std::stoi(argv[2])
                      : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 2) jobs = 2;

  auto records = synthetic_corpus(n);
  ScanOptions serial_opts{1, "json", false};
  ScanOptions parallel_opts{jobs, "json", false};

  ScanReport serial_report, parallel_report;
  // Warm-up pass so lazily built tables do not skew the first measurement.
  run_scan_serial({records.begin(), records.begin() + std::min<size_t>(8, records.size())},
                  serial_opts);

  double t_serial = time_ms([&] { serial_report = run_scan_serial(records, serial_opts); });
  double t_parallel = time_ms([&] { parallel_report = run_scan(records, parallel_opts); });

  bool identical = render_report(serial_report, serial_opts) ==
                   render_report(parallel_report, parallel_opts);

  std::cout << "records:  " << records.size() << "\n"
            << "jobs:     " << jobs << "\n"
            << "serial:   " << t_serial << " ms\n"
            << "parallel: " << t_parallel << " ms\n"
            << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n"
            << "outputs identical: " << (identical ? "yes" : "NO") << "\n";
  return identical ? 0 : 1;
}

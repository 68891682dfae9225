#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idp/geometry.hpp"

namespace idp {

struct BenchRecord {
  std::string suite;
  Kind kind = Kind::Interval;
  int n = 0;
  long long m = 0;
  int k = 0;
  int reps = 0;
  long long median_ns = 0;
  std::string answer;  // "yes" or "no"
};

struct BenchReport {
  std::vector<BenchRecord> records;
  // Least-squares slope of log(time) against log(n); NaN with fewer than
  // two distinct sizes.
  double exponent = 0.0;
};

struct BenchSuite {
  std::string name;
  Kind kind = Kind::Interval;
  std::vector<int> sizes;
  double density = 8.0;  // expected average degree, so m/n is about 4
};

// Known suites: interval, circular, interval-quick, circular-quick, empty.
// Throws std::invalid_argument for other names.
BenchSuite bench_suite(const std::string& name);

// Repetitions per size: IDP_BENCH_REPS when set, otherwise 5.
int bench_repetitions();

// Repetitions go round-robin over the sizes; each record keeps the median.
// Freed memory stays with the allocator unless IDP_BENCH_COLD_HEAP=1.
BenchReport run_bench(const BenchSuite& suite, int reps);

double fitted_exponent(const std::vector<BenchRecord>& records);

// Tab-separated records with a header row, then an "exponent" row.
std::string format_report(const BenchReport& report);
BenchReport parse_report(std::string_view text);

}  // namespace idp

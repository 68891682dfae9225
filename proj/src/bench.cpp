#include "idp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifdef __GLIBC__
#include <malloc.h>
#endif

#include "idp/generator.hpp"
#include "idp/graph.hpp"
#include "idp/solver.hpp"

namespace idp {

BenchSuite bench_suite(const std::string& name) {
  const std::vector<int> full{10'000, 20'000, 50'000, 100'000, 200'000, 500'000, 1'000'000};
  const std::vector<int> quick{1'000, 2'000, 5'000, 10'000, 20'000};
  if (name == "interval") return {name, Kind::Interval, full};
  if (name == "circular") return {name, Kind::Circular, full};
  if (name == "interval-quick") return {name, Kind::Interval, quick};
  if (name == "circular-quick") return {name, Kind::Circular, quick};
  if (name == "empty") return {name, Kind::Interval, {}};
  throw std::invalid_argument("unknown bench suite '" + name + "'");
}

int bench_repetitions() {
  if (const char* env = std::getenv("IDP_BENCH_REPS")) {
    const int reps = std::atoi(env);
    if (reps > 0) return reps;
  }
  return 5;
}

namespace {

bool keep_heap_warm() {
  const char* env = std::getenv("IDP_BENCH_COLD_HEAP");
  if (env && std::string(env) == "1") return false;
#ifdef __GLIBC__
  // Without this glibc hands the buffers of large instances back to the
  // kernel after every run, so only the large sizes pay page faults again.
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
  return true;
#else
  return false;
#endif
}

}  // namespace

BenchReport run_bench(const BenchSuite& suite, int reps) {
  keep_heap_warm();
  std::vector<Instance> instances;
  for (int n : suite.sizes) {
    GenParams p;
    p.kind = suite.kind;
    p.n = n;
    p.k = std::max(2, n / 100);
    p.density = suite.density;
    p.planted = true;
    p.seed = 1000003ull * std::uint64_t(n) + (suite.kind == Kind::Circular);
    instances.push_back(gen_random(p));
  }
  // Repetitions go round-robin over the sizes so that a slow spell on the
  // machine hits every size alike.
  const std::size_t sizes = instances.size();
  std::vector<std::vector<long long>> times(sizes);
  std::vector<std::string> answers(sizes);
  for (int r = 0; r < reps; ++r) {
    for (std::size_t i = 0; i < sizes; ++i) {
      const auto start = std::chrono::steady_clock::now();
      const Outcome out = solve(instances[i]);
      const auto stop = std::chrono::steady_clock::now();
      times[i].push_back(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      answers[i] = is_yes(out) ? "yes" : "no";
    }
  }
  BenchReport report;
  for (std::size_t i = 0; i < sizes; ++i) {
    std::sort(times[i].begin(), times[i].end());
    BenchRecord rec;
    rec.suite = suite.name;
    rec.kind = suite.kind;
    rec.n = suite.sizes[i];
    rec.m = build_adjacency(instances[i].rep).edge_count();
    rec.k = instances[i].k();
    rec.reps = reps;
    rec.median_ns = times[i][times[i].size() / 2];
    rec.answer = answers[i];
    report.records.push_back(rec);
  }
  report.exponent = fitted_exponent(report.records);
  return report;
}

double fitted_exponent(const std::vector<BenchRecord>& records) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records) {
    if (r.n > 0 && r.median_ns > 0) {
      pts.emplace_back(std::log(double(r.n)), std::log(double(r.median_ns)));
    }
  }
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) mx += x, my += y;
  if (pts.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  mx /= double(pts.size());
  my /= double(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / sxx;
}

namespace {

const char* kHeader = "suite\tkind\tn\tm\tk\treps\tmedian_ns\tanswer";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) out.push_back(field);
  return out;
}

}  // namespace

std::string format_report(const BenchReport& report) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& r : report.records) {
    out << r.suite << '\t' << to_string(r.kind) << '\t' << r.n << '\t' << r.m
        << '\t' << r.k << '\t' << r.reps << '\t' << r.median_ns << '\t'
        << r.answer << '\n';
  }
  out.precision(6);
  out << "exponent\t";
  if (std::isnan(report.exponent)) {
    out << "nan";
  } else {
    out << std::fixed << report.exponent;
  }
  out << '\n';
  return out.str();
}

BenchReport parse_report(std::string_view text) {
  BenchReport report;
  report.exponent = std::numeric_limits<double>::quiet_NaN();
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bench report line " + std::to_string(number) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    if (number == 1) {
      if (line != kHeader) fail("unexpected header");
      continue;
    }
    const auto f = split_tabs(line);
    if (f.size() == 2 && f[0] == "exponent") {
      report.exponent = f[1] == "nan" ? std::numeric_limits<double>::quiet_NaN()
                                      : std::stod(f[1]);
      continue;
    }
    if (f.size() != 8) fail("expected 8 fields");
    BenchRecord r;
    r.suite = f[0];
    if (f[1] == "interval") {
      r.kind = Kind::Interval;
    } else if (f[1] == "circular") {
      r.kind = Kind::Circular;
    } else {
      fail("unknown kind");
    }
    try {
      r.n = std::stoi(f[2]);
      r.m = std::stoll(f[3]);
      r.k = std::stoi(f[4]);
      r.reps = std::stoi(f[5]);
      r.median_ns = std::stoll(f[6]);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    r.answer = f[7];
    report.records.push_back(r);
  }
  if (number == 0) fail("empty report");
  return report;
}

}  // namespace idp

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "idp/bench.hpp"
#include "idp/generator.hpp"
#include "idp/io.hpp"
#include "idp/oracle.hpp"
#include "idp/solver.hpp"

using namespace idp;
namespace fs = std::filesystem;

namespace {

const char* kThree =
    "idp interval n=3 k=1\n"
    "v u 1 3\n"
    "v a 2 5\n"
    "v v 4 6\n"
    "p u v 1\n";

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(IDP_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(IDP_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("idp_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("parse the three-vertex file") {
  const auto inst = parse_instance(kThree);
  CHECK(inst.n() == 3);
  CHECK(inst.rep.left == std::vector<int>{1, 2, 4});
  CHECK(inst.rep.right == std::vector<int>{3, 5, 6});
  REQUIRE(inst.k() == 1);
  CHECK(inst.pairs[0].s == 0);
  CHECK(inst.pairs[0].t == 2);
  CHECK(inst.rep.name(1) == "a");
  CHECK(emit_instance(inst) == kThree);
}

TEST_CASE("parse errors carry the line") {
  CHECK(parse_error_line("idp interval n=1 k=0\nv u 0 2\n") == 2);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("idp tree n=1 k=0\nv u 1 2\n") == 1);
  CHECK(parse_error_line("idp interval n=2 k=0\nv u 1 3\n") == 2);
  CHECK(parse_error_line("idp interval n=2 k=0\nv u 1 3\nv u 2 4\n") == 3);
  CHECK(parse_error_line("idp interval n=2 k=1\nv u 1 3\nv w 2 4\np u x 1\n") == 4);
  CHECK(parse_error_line("idp interval n=2 k=1\nv u 1 3\nv w 3 4\np u w 1\n") == 3);
  CHECK(parse_error_line("idp interval n=1 k=0\nv u 1 two\n") == 2);
  CHECK(parse_error_line("idp circular n=3 k=1\nv u 1 3\nv a 2 5\nv v 4 6\np u v 2\n") == 5);
  try {
    parse_instance("idp interval n=1 k=0\nv u 0 2\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  const auto inst = parse_instance("# small\n\nidp interval n=3 k=1\nv u 1 3\n\nv a 2 5\nv v 4 6\n# pairs\np u v 1\n");
  CHECK(emit_instance(inst) == kThree);
}

TEST_CASE("golden files round-trip") {
  int files = 0;
  for (const auto& entry : fs::directory_iterator(IDP_DATA_DIR)) {
    if (entry.path().extension() != ".idp") continue;
    const auto text = read_file(entry.path().string());
    CAPTURE(entry.path().string());
    CHECK(emit_instance(parse_instance(text)) == text);
    ++files;
  }
  CHECK(files >= 5);
}

TEST_CASE("solutions round-trip") {
  const auto inst = parse_instance(kThree);
  const Outcome yes = solve(inst);
  const auto text = emit_solution(inst, yes, false);
  CHECK(text == "yes\npath 1 u a v\n");
  const auto back = parse_solution(text, inst);
  REQUIRE(is_yes(back));
  CHECK(std::get<Solution>(back).paths == std::get<Solution>(yes).paths);

  const Outcome no = NoCertificate{"2", 0};
  CHECK(emit_solution(inst, no, false) == "no\n");
  const auto certified = emit_solution(inst, no, true);
  CHECK(certified == "no step=2 detail=pair=1\n");
  const auto parsed = parse_solution(certified, inst);
  REQUIRE_FALSE(is_yes(parsed));
  CHECK(std::get<NoCertificate>(parsed).step == "2");
  CHECK_THROWS_AS(parse_solution("yes\npath 1 u q v\n", inst), ParseError);
  CHECK_THROWS_AS(parse_solution("maybe\n", inst), ParseError);
}

TEST_CASE("generation is deterministic") {
  for (Kind kind : {Kind::Interval, Kind::Circular}) {
    GenParams p;
    p.kind = kind;
    p.n = 5;
    p.seed = 1;
    CHECK(emit_instance(gen_random(p)) == emit_instance(gen_random(p)));
    p.density = 3;
    p.planted = true;
    CHECK(emit_instance(gen_random(p)) == emit_instance(gen_random(p)));
    p.seed = 2;
    p.n = 50;
    GenParams q = p;
    q.seed = 3;
    CHECK(emit_instance(gen_random(p)) != emit_instance(gen_random(q)));
  }
}

TEST_CASE("generated instances validate") {
  for (Kind kind : {Kind::Interval, Kind::Circular}) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      GenParams p;
      p.kind = kind;
      p.n = 2 + int(seed % 60);
      p.density = double(seed % 7);
      p.k = 1 + int(seed % 4);
      p.max_requirement = 3;
      p.planted = seed % 2 == 0;
      if (p.planted) p.n = std::max(p.n, 4 * p.k);
      p.seed = seed;
      CAPTURE(seed);
      const auto g = generate(p);
      CHECK_FALSE(validate_instance(g.instance).has_value());
      if (p.planted) CHECK(verify_mutually_induced(g.instance, g.witness).empty());
    }
  }
}

TEST_CASE("planted instances are yes") {
  for (Kind kind : {Kind::Interval, Kind::Circular}) {
    GenParams p;
    p.kind = kind;
    p.n = 20;
    p.k = 2;
    p.density = 2;
    p.planted = true;
    p.seed = 7;
    const auto inst = gen_random(p);
    BruteBounds bounds;
    bounds.max_n = 20;
    bounds.path_cap = 1 << 20;
    CHECK(brute_solve(inst, nullptr, bounds));
    CHECK(is_yes(solve(inst)));
  }
  GenParams big;
  big.n = 10'000;
  big.k = 50;
  big.density = 8;
  big.max_requirement = 3;
  big.planted = true;
  const auto g = generate(big);
  CHECK(verify_mutually_induced(g.instance, g.witness).empty());
  CHECK(is_yes(solve(g.instance)));
}

TEST_CASE("impossible parameters are refused") {
  GenParams p;
  p.n = 3;
  p.k = 4;
  CHECK_THROWS_AS(gen_random(p), InfeasibleParams);
  p.k = 2;
  p.planted = true;
  CHECK_THROWS_AS(gen_random(p), InfeasibleParams);
  p.n = 0;
  CHECK_THROWS_AS(gen_random(p), InfeasibleParams);
}

TEST_CASE("large generation is fast") {
  GenParams p;
  p.n = 100'000;
  p.k = 1000;
  p.density = 8;
  p.planted = true;
  const auto start = std::chrono::steady_clock::now();
  const auto inst = gen_random(p);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(inst.n() == 100'000);
  CHECK(seconds < 1.0);
}

TEST_CASE("bench reports") {
  const auto empty = run_bench(bench_suite("empty"), 3);
  CHECK(empty.records.empty());
  CHECK(std::isnan(empty.exponent));
  CHECK(parse_report(format_report(empty)).records.empty());

  BenchSuite tiny{"tiny", Kind::Circular, {200, 400}};
  const auto report = run_bench(tiny, 2);
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[1].n == 400);
  CHECK(report.records[0].answer == "yes");
  const auto back = parse_report(format_report(report));
  REQUIRE(back.records.size() == 2);
  CHECK(back.records[1].median_ns == report.records[1].median_ns);
  CHECK(back.records[1].m == report.records[1].m);
  CHECK(back.records[0].kind == Kind::Circular);
  CHECK(format_report(back) == format_report(report));
  CHECK_THROWS(bench_suite("nope"));
  CHECK_THROWS(parse_report("bogus\n"));
}

TEST_CASE("growth exponent of a linear series") {
  std::vector<BenchRecord> rs(3);
  rs[0].n = 1000, rs[0].median_ns = 5000;
  rs[1].n = 2000, rs[1].median_ns = 10000;
  rs[2].n = 8000, rs[2].median_ns = 40000;
  CHECK(fitted_exponent(rs) == doctest::Approx(1.0));
}

TEST_CASE("command line") {
  SUBCASE("solve a yes instance") {
    const auto r = run_cli("solve " + data("three_vertex.idp"));
    CHECK(r.code == 0);
    CHECK(r.out == "yes\npath 1 u a v\n");
  }
  SUBCASE("solve a no instance with a certificate") {
    const auto r = run_cli("solve --certify " + data("far_multi_pair.idp"));
    CHECK(r.code == 1);
    CHECK(r.out == "no step=2 detail=pair=1\n");
    CHECK(run_cli("solve " + data("far_multi_pair.idp")).out == "no\n");
  }
  SUBCASE("oracle") {
    const auto r = run_cli("oracle " + data("two_paths.idp"));
    CHECK(r.code == 0);
    CHECK(r.out == "yes\npath 1 u v\npath 1 u w1 v\n");
    CHECK(run_cli("oracle " + data("far_multi_pair.idp")).code == 1);
  }
  SUBCASE("verify") {
    const auto good = temp_file("good.sol", "yes\npath 1 u a v\n");
    const auto ok = run_cli("verify " + data("three_vertex.idp") + " " + good);
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok\n");
    const auto bad = temp_file("bad.sol", "yes\npath 1 u v\n");
    const auto r = run_cli("verify " + data("three_vertex.idp") + " " + bad);
    CHECK(r.code == 1);
    CHECK(r.out.find("violation") != std::string::npos);
  }
  SUBCASE("gen then solve") {
    const auto g = run_cli("gen --kind circular --n 30 --k 3 --density 3 --planted --seed 4");
    CHECK(g.code == 0);
    const auto file = temp_file("gen.idp", g.out);
    CHECK(run_cli("solve " + file).code == 0);
    CHECK(run_cli("gen --kind circular --n 30 --k 3 --density 3 --planted --seed 4").out == g.out);
  }
  SUBCASE("bench") {
    const auto r = run_cli("bench empty");
    CHECK(r.code == 0);
    CHECK(r.out == "suite\tkind\tn\tm\tk\treps\tmedian_ns\tanswer\nexponent\tnan\n");
  }
  SUBCASE("invalid input") {
    const auto bad = temp_file("bad.idp", "idp interval n=1 k=0\nv u 0 2\n");
    const auto r = run_cli("solve " + bad);
    CHECK(r.code == 2);
    CHECK(r.out.find("line 2") != std::string::npos);
    CHECK(run_cli("solve /nonexistent/file.idp").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("gen --n notanumber").code == 2);
    CHECK(run_cli("").code == 2);
  }
}

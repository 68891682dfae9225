// Command-line driver: solve, oracle, verify, gen, bench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "idp/bench.hpp"
#include "idp/generator.hpp"
#include "idp/io.hpp"
#include "idp/oracle.hpp"
#include "idp/solver.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;

idp::Instance load_instance(const std::string& path) {
  return idp::parse_instance(idp::read_file(path));
}

int run_solve(const std::string& path, bool certify) {
  const auto inst = load_instance(path);
  const auto out = idp::solve(inst);
  std::cout << idp::emit_solution(inst, out, certify);
  return idp::is_yes(out) ? kYes : kNo;
}

int run_oracle(const std::string& path, int max_n, long long max_r) {
  const auto inst = load_instance(path);
  idp::BruteBounds bounds;
  bounds.max_n = max_n;
  bounds.max_total_requirement = max_r;
  idp::Solution sol;
  if (idp::brute_solve(inst, &sol, bounds)) {
    std::cout << idp::emit_solution(inst, sol, false);
    return kYes;
  }
  std::cout << "no\n";
  return kNo;
}

int run_verify(const std::string& inst_path, const std::string& sol_path) {
  const auto inst = load_instance(inst_path);
  const auto claimed = idp::parse_solution(idp::read_file(sol_path), inst);
  const auto* sol = std::get_if<idp::Solution>(&claimed);
  if (!sol) {
    std::cout << "solution answers no; there are no paths to verify\n";
    return kNo;
  }
  const auto violations = idp::verify_mutually_induced(inst, *sol);
  if (violations.empty()) {
    std::cout << "ok\n";
    return kYes;
  }
  for (const auto& v : violations) {
    std::cout << "violation " << v.describe(inst.rep) << '\n';
  }
  return kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced disjoint paths on interval and circular-arc graphs"};
  app.require_subcommand(1);

  bool certify = false;
  std::string file;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_flag("--certify", certify, "Explain No answers");

  int max_n = 12;
  long long max_r = 6;
  auto* oracle = app.add_subcommand("oracle", "Solve by exhaustive search");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--max-n", max_n, "Largest accepted vertex count");
  oracle->add_option("--max-requirement", max_r, "Largest accepted total requirement");

  std::string sol_file;
  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("instance", file, "Instance file")->required();
  verify->add_option("solution", sol_file, "Solution file")->required();

  idp::GenParams gp;
  std::string kind = "interval";
  std::string witness_file;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind, "interval or circular")
      ->check(CLI::IsMember({"interval", "circular"}));
  gen->add_option("--n", gp.n, "Number of vertices");
  gen->add_option("--density", gp.density, "Expected average degree (0: uniform endpoints)");
  gen->add_option("--k", gp.k, "Number of terminal pairs");
  gen->add_option("--max-r", gp.max_requirement, "Largest requirement");
  gen->add_flag("--planted", gp.planted, "Plant a solution");
  gen->add_option("--seed", gp.seed, "Random seed");
  gen->add_option("--witness", witness_file, "Write the planted solution here");

  std::string suite_name;
  std::string report_file;
  auto* bench = app.add_subcommand("bench", "Time the solver on a generated suite");
  bench->add_option("suite", suite_name,
                    "interval, circular, interval-quick, circular-quick or empty")
      ->required();
  bench->add_option("--output", report_file, "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*solve) return run_solve(file, certify);
    if (*oracle) return run_oracle(file, max_n, max_r);
    if (*verify) return run_verify(file, sol_file);
    if (*gen) {
      gp.kind = kind == "circular" ? idp::Kind::Circular : idp::Kind::Interval;
      const auto g = idp::generate(gp);
      std::cout << idp::emit_instance(g.instance);
      if (!witness_file.empty()) {
        std::ofstream(witness_file) << idp::emit_solution(g.instance, g.witness, false);
      }
      return 0;
    }
    if (*bench) {
      const auto suite = idp::bench_suite(suite_name);
      const auto text = idp::format_report(idp::run_bench(suite, idp::bench_repetitions()));
      std::cout << text;
      if (!report_file.empty()) std::ofstream(report_file) << text;
      return 0;
    }
  } catch (const idp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

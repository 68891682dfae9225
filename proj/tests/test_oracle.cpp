#include <doctest.h>

#include <algorithm>
#include <set>

#include "idp/generator.hpp"
#include "idp/oracle.hpp"
#include "testkit.hpp"

using namespace idp;
using testkit::make_instance;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

// Every simple u-v path, then drop those with a chord other than u-v.
void naive_paths(const Representation& rep, std::vector<Vertex>& path, Vertex v,
                 std::vector<char>& used, std::set<std::vector<Vertex>>& out) {
  const Vertex at = path.back();
  if (at == v) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t j = i + 2; j < path.size(); ++j) {
        if (i == 0 && j + 1 == path.size()) continue;
        if (adjacent(rep, path[i], path[j])) return;
      }
    }
    out.insert(path);
    return;
  }
  for (Vertex w = 0; w < rep.n(); ++w) {
    if (used[w] || !adjacent(rep, at, w)) continue;
    used[w] = 1;
    path.push_back(w);
    naive_paths(rep, path, v, used, out);
    path.pop_back();
    used[w] = 0;
  }
}

}  // namespace

TEST_CASE("verifier accepts a single induced path") {
  const auto inst = make_instance(Kind::Interval, {{1, 3}, {2, 5}, {4, 6}}, {{0, 2, 1}});
  CHECK(verify_mutually_induced(inst, Solution{{{0, {0, 1, 2}}}}).empty());
}

TEST_CASE("verifier flags a shared inner vertex") {
  // u1 and u2 both reach v1 and v2 through a.
  const auto inst = make_instance(Kind::Interval,
                                  {{1, 4}, {2, 5}, {3, 9}, {6, 10}, {7, 11}},
                                  {{0, 3, 1}, {1, 4, 1}});
  const Solution sol{{{0, {0, 2, 3}}, {1, {1, 2, 4}}}};
  CHECK(has_kind(verify_mutually_induced(inst, sol), ViolationKind::IllegalSharedVertex));
}

TEST_CASE("verifier flags an inner chord") {
  // u a b v with u adjacent to b.
  const auto inst = make_instance(Kind::Interval, {{1, 5}, {2, 6}, {4, 8}, {7, 9}},
                                  {{0, 3, 1}});
  const Solution sol{{{0, {0, 1, 2, 3}}}};
  CHECK(has_kind(verify_mutually_induced(inst, sol), ViolationKind::InnerChord));
}

TEST_CASE("verifier flags quotas, broken paths and wrong ends") {
  const auto inst = make_instance(Kind::Interval, {{1, 3}, {2, 5}, {4, 6}}, {{0, 2, 1}});
  CHECK(has_kind(verify_mutually_induced(inst, Solution{}), ViolationKind::QuotaMismatch));
  CHECK(has_kind(verify_mutually_induced(inst, Solution{{{0, {0, 2}}}}), ViolationKind::NotAPath));
  CHECK(has_kind(verify_mutually_induced(inst, Solution{{{0, {1, 2}}}}), ViolationKind::WrongEndpoints));
}

TEST_CASE("verifier flags inner vertices touching another path") {
  const auto inst = make_instance(Kind::Interval,
                                  {{1, 3}, {2, 6}, {4, 7}, {5, 9}, {8, 11}, {10, 12}},
                                  {{0, 2, 1}, {3, 5, 1}});
  const Solution sol{{{0, {0, 1, 2}}, {1, {3, 4, 5}}}};
  CHECK(has_kind(verify_mutually_induced(inst, sol), ViolationKind::IllegalAdjacency));
}

TEST_CASE("path enumeration on small graphs") {
  const auto line = make_instance(Kind::Interval, {{1, 3}, {2, 5}, {4, 6}}, {});
  const std::vector<char> all(3, 1);
  CHECK(enumerate_induced_paths(line.rep, 0, 2, all, 100).paths ==
        std::vector<std::vector<Vertex>>{{0, 1, 2}});

  // u meets v directly and through a.
  const auto tri = make_instance(Kind::Interval, {{1, 4}, {2, 6}, {3, 5}}, {});
  const auto e = enumerate_induced_paths(tri.rep, 0, 1, all, 100);
  CHECK(e.paths == std::vector<std::vector<Vertex>>{{0, 1}, {0, 2, 1}});
  CHECK_FALSE(e.overflow);
  CHECK(enumerate_induced_paths(tri.rep, 0, 1, all, 1).overflow);
}

TEST_CASE("path enumeration matches a naive recount") {
  for (Kind kind : {Kind::Interval, Kind::Circular}) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      GenParams p;
      p.kind = kind;
      p.n = 8;
      p.density = seed % 2 ? 0.0 : 3.0;
      p.k = 0;
      p.seed = seed;
      const auto rep = gen_random(p).rep;
      const std::vector<char> all(rep.n(), 1);
      std::set<std::vector<Vertex>> naive;
      std::vector<Vertex> path{0};
      std::vector<char> used(rep.n(), 0);
      used[0] = 1;
      naive_paths(rep, path, 7, used, naive);
      const auto got = enumerate_induced_paths(rep, 0, 7, all, 1 << 20).paths;
      CHECK(std::set<std::vector<Vertex>>(got.begin(), got.end()) == naive);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("exhaustive solver on the small examples") {
  const auto yes = make_instance(Kind::Interval, {{1, 3}, {2, 5}, {4, 6}}, {{0, 2, 1}});
  Solution sol;
  CHECK(brute_solve(yes, &sol));
  CHECK(verify_mutually_induced(yes, sol).empty());

  const auto apart = make_instance(Kind::Interval, {{1, 2}, {3, 4}}, {{0, 1, 1}});
  CHECK_FALSE(brute_solve(apart));

  const auto twice = make_instance(Kind::Interval, {{1, 4}, {3, 8}, {2, 6}, {5, 7}}, {{0, 1, 2}});
  REQUIRE(brute_solve(twice, &sol));
  std::set<std::vector<Vertex>> paths;
  for (const auto& pp : sol.paths) paths.insert(pp.vertices);
  CHECK(paths == std::set<std::vector<Vertex>>{{0, 1}, {0, 2, 1}});
}

TEST_CASE("exhaustive solver enforces its bounds") {
  GenParams p;
  p.n = 20;
  p.k = 1;
  p.seed = 3;
  CHECK_THROWS_AS(brute_solve(gen_random(p)), BoundExceeded);
}

TEST_CASE("exhaustive independent set") {
  CHECK(brute_max_is({{1, 2}, {3, 4}}) == 2);
  CHECK(brute_max_is({{1, 4}, {3, 6}, {2, 5}}) == 1);
  CHECK(brute_max_is({}) == 0);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "idp/graph.hpp"
#include "idp/instance.hpp"
#include "testkit.hpp"

using namespace idp;
using testkit::make_instance;

namespace {

std::vector<Vertex> sorted_neighbors(const Adjacency& adj, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : adj.neighbors(v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> arc_points(const Representation& rep, Vertex v) {
  std::set<int> pts;
  for (int p = 1; p <= rep.points(); ++p) {
    if (covers(rep, v, p)) pts.insert(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("validate accepts a well formed instance") {
  const auto inst = make_instance(Kind::Interval, {{1, 3}, {2, 5}, {4, 6}}, {{0, 2, 1}});
  CHECK_FALSE(validate_instance(inst).has_value());
}

TEST_CASE("validate rejects shared endpoints") {
  Instance inst;
  inst.rep.left = {1, 3};
  inst.rep.right = {3, 5};
  const auto err = validate_instance(inst);
  REQUIRE(err.has_value());
  CHECK(err->kind == ValidationErrorKind::DuplicateEndpoint);
  CHECK(err->endpoint == 3);
}

TEST_CASE("validate rejects other defects") {
  auto base = make_instance(Kind::Interval, {{1, 3}, {2, 5}, {4, 6}}, {{0, 2, 1}});

  auto degenerate = base;
  degenerate.pairs = {{0, 0, 1}};
  CHECK(validate_instance(degenerate)->kind == ValidationErrorKind::DegeneratePair);

  auto out_of_range = base;
  out_of_range.rep.right[2] = 7;
  CHECK(validate_instance(out_of_range)->kind == ValidationErrorKind::EndpointOutOfRange);

  auto inverted = base;
  std::swap(inverted.rep.left[0], inverted.rep.right[0]);
  CHECK(validate_instance(inverted)->kind == ValidationErrorKind::InvertedInterval);

  auto unknown = base;
  unknown.pairs = {{0, 5, 1}};
  CHECK(validate_instance(unknown)->kind == ValidationErrorKind::UnknownVertex);

  auto zero = base;
  zero.pairs[0].requirement = 0;
  CHECK(validate_instance(zero)->kind == ValidationErrorKind::ZeroRequirement);

  auto twice = base;
  twice.pairs = {{0, 2, 1}, {2, 0, 1}};
  CHECK(validate_instance(twice)->kind == ValidationErrorKind::DuplicatePair);

  auto circle = base;
  circle.rep.kind = Kind::Circular;
  circle.pairs[0].requirement = 2;
  CHECK(validate_instance(circle)->kind == ValidationErrorKind::RequirementOnCircular);

  Instance empty;
  CHECK(validate_instance(empty)->kind == ValidationErrorKind::EmptyGraph);
}

TEST_CASE("adjacency of intervals") {
  Representation rep;
  rep.left = {1, 2, 4};
  rep.right = {3, 5, 6};
  CHECK(adjacent(rep, 0, 1));
  CHECK_FALSE(adjacent(rep, 0, 2));
  CHECK_FALSE(adjacent(rep, 0, 0));

  const auto adj = build_adjacency(rep);
  CHECK(sorted_neighbors(adj, 0) == std::vector<Vertex>{1});
  CHECK(sorted_neighbors(adj, 1) == std::vector<Vertex>{0, 2});
  CHECK(sorted_neighbors(adj, 2) == std::vector<Vertex>{1});
  CHECK(adj.edge_count() == 2);

  Representation one;
  one.left = {1};
  one.right = {2};
  CHECK(build_adjacency(one).degree(0) == 0);
}

TEST_CASE("wrapping arc meets an arc through the seam") {
  Representation rep;
  rep.kind = Kind::Circular;
  rep.left = {7, 1, 3, 6};
  rep.right = {2, 4, 5, 8};
  // Adjacent exactly when the point sets intersect.
  for (Vertex x = 0; x < rep.n(); ++x) {
    for (Vertex y = 0; y < rep.n(); ++y) {
      if (x == y) continue;
      const auto a = arc_points(rep, x);
      const auto b = arc_points(rep, y);
      const bool meet = std::any_of(a.begin(), a.end(), [&](int p) { return b.count(p); });
      CHECK(adjacent(rep, x, y) == meet);
    }
  }
  CHECK(adjacent(rep, 0, 1));
}

TEST_CASE("adjacency lists match pairwise checks") {
  for (Kind kind : {Kind::Interval, Kind::Circular}) {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      GenParams p;
      p.kind = kind;
      p.n = 1 + int(seed % 64);
      p.density = seed % 3 == 0 ? 0.0 : double(seed % 11);
      p.k = 0;
      p.seed = seed;
      const auto inst = gen_random(p);
      const auto& rep = inst.rep;
      const auto adj = build_adjacency(rep);
      long long degrees = 0;
      for (Vertex x = 0; x < rep.n(); ++x) {
        std::vector<Vertex> expect;
        for (Vertex y = 0; y < rep.n(); ++y) {
          CHECK(adjacent(rep, x, y) == adjacent(rep, y, x));
          if (adjacent(rep, x, y)) expect.push_back(y);
        }
        CHECK(sorted_neighbors(adj, x) == expect);
        CHECK(adj.degree(x) == int(expect.size()));
        degrees += adj.degree(x);
      }
      CHECK(adj.edge_count() * 2 == degrees);
    }
  }
}

TEST_CASE("buckets list the covering ranges") {
  Representation rep;
  rep.left = {1, 2};
  rep.right = {3, 5};
  rep.left.push_back(4);
  rep.right.push_back(6);
  const BucketIndex b(rep, [](Vertex v) { return v == 0; });
  for (int p = 1; p <= 3; ++p) CHECK(std::vector<Vertex>(b.bucket(p).begin(), b.bucket(p).end()) == std::vector<Vertex>{0});
  for (int p = 4; p <= 6; ++p) CHECK(b.bucket(p).empty());

  const BucketIndex both(rep, [](Vertex v) { return v < 2; });
  std::vector<Vertex> at2(both.bucket(2).begin(), both.bucket(2).end());
  std::sort(at2.begin(), at2.end());
  CHECK(at2 == std::vector<Vertex>{0, 1});
}

TEST_CASE("buckets of a wrapping arc") {
  Representation rep;
  rep.kind = Kind::Circular;
  rep.left = {7, 1, 3, 5};
  rep.right = {2, 4, 6, 8};
  const BucketIndex b(rep, [](Vertex v) { return v == 0; });
  for (int p = 1; p <= 8; ++p) {
    const bool expect = arc_points(rep, 0).count(p) > 0;
    CHECK(b.bucket(p).size() == (expect ? 1u : 0u));
  }
  CHECK(b.bucket(7).size() == 1);
  CHECK(b.bucket(8).size() == 1);
  CHECK(b.bucket(1).size() == 1);
  CHECK(b.bucket(2).size() == 1);
  CHECK(b.bucket(3).empty());
}

TEST_CASE("bucket total stays within 4m + 2n") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenParams p;
    p.n = 5 + int(seed % 200);
    p.density = seed % 4 == 0 ? 0.0 : double(seed % 9);
    p.k = 0;
    p.seed = seed;
    const auto inst = gen_random(p);
    const BucketIndex b(inst.rep, [](Vertex) { return true; });
    const auto m = build_adjacency(inst.rep).edge_count();
    CHECK(b.total_size() <= 4 * m + 2 * inst.n());
  }
}

TEST_CASE("endpoints form the ground set 1..2n") {
  for (Kind kind : {Kind::Interval, Kind::Circular}) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      GenParams p;
      p.kind = kind;
      p.n = 1 + int(seed % 50);
      p.density = double(seed % 5);
      p.k = 0;
      p.seed = seed;
      const auto rep = gen_random(p).rep;
      std::vector<int> all(rep.left);
      all.insert(all.end(), rep.right.begin(), rep.right.end());
      std::sort(all.begin(), all.end());
      for (int i = 0; i < int(all.size()); ++i) CHECK(all[i] == i + 1);
    }
  }
}

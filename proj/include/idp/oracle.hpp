#pragma once

// Exhaustive reference implementations. Exponential; meant for small inputs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "idp/geometry.hpp"
#include "idp/independent_set.hpp"
#include "idp/instance.hpp"
#include "idp/solution.hpp"

namespace idp {

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ViolationKind {
  InnerChord,
  IllegalSharedVertex,
  IllegalAdjacency,
  QuotaMismatch,
  NotAPath,
  WrongEndpoints,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> paths;       // indices into solution.paths
  std::vector<Vertex> vertices;
  int pair = -1;                // 0-based, for QuotaMismatch

  std::string describe(const Representation& rep) const;
};

// Every violated clause, in a deterministic order. Empty means ok.
std::vector<Violation> verify_mutually_induced(const Instance& inst,
                                               const Solution& sol);

struct PathEnumeration {
  std::vector<std::vector<Vertex>> paths;
  bool overflow = false;
};

// All u-v paths without inner chords whose inner vertices satisfy
// `inner_ok`, in lexicographic order of vertex ids, at most `cap` of them.
PathEnumeration enumerate_induced_paths(const Representation& rep, Vertex u,
                                        Vertex v,
                                        const std::vector<char>& inner_ok,
                                        std::size_t cap);

// Paths one pair may draw from: every `forced` path must be used, the
// remaining requirement is filled from `optional`.
struct PathMenu {
  std::vector<std::vector<Vertex>> forced;
  std::vector<std::vector<Vertex>> optional;
};

struct BruteBounds {
  int max_n = 12;
  long long max_total_requirement = 6;
  std::size_t path_cap = 20000;
};

// Picks exactly r_i distinct paths per pair from the menus, pairwise
// compatible in G. Returns false when impossible.
bool brute_select(const Instance& inst, const std::vector<PathMenu>& menus,
                  Solution* out = nullptr);

// Exact answer by backtracking over chordless paths. Throws BoundExceeded.
bool brute_solve(const Instance& inst, Solution* out = nullptr,
                 const BruteBounds& bounds = {});

// The chordless s-t paths of one pair that can appear in any solution:
// inner vertices are non-terminals not adjacent to a foreign terminal
// vertex, and, when given, flagged in `allowed`.
std::vector<std::vector<Vertex>> pair_paths(const Instance& inst, int pair,
                                            const std::vector<char>* allowed,
                                            std::size_t cap);

// Size of a maximum set of pairwise disjoint arcs. At most 20 arcs.
int brute_max_is(const std::vector<Span>& arcs);

// Whether some pairwise disjoint subset holds exactly quotas[c] items of
// each color c. At most 24 items.
bool brute_quota_feasible(const ColoredIntervalSet& set);

}  // namespace idp

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "idp/geometry.hpp"

namespace idp {

struct ColoredInterval {
  int color = 0;
  int first = 0;  // left end of the covered range
  int last = 0;   // right end of the covered range
  int id = 0;
};

struct ColoredIntervalSet {
  std::vector<ColoredInterval> items;
  std::vector<int> quotas;  // per color, >= 0
  int points = 0;           // ground set 1..points
};

struct QuotaInfeasible {
  int color = -1;
};

// Color blocks overlap in left-endpoint order; the greedy is not valid here.
struct QuotaPreconditionViolated {
  int color_a = -1;
  int color_b = -1;
};

// Indices into set.items of the selected intervals.
using QuotaSelection = std::vector<int>;
using QuotaResult =
    std::variant<QuotaSelection, QuotaInfeasible, QuotaPreconditionViolated>;

// True when, for every pair of distinct colors, all left endpoints of one
// precede all left endpoints of the other.
bool colors_are_block_ordered(const ColoredIntervalSet& set,
                              QuotaPreconditionViolated* witness = nullptr);

// Right-to-left greedy over left-endpoint buckets: take the interval with
// the largest left endpoint whose color still has quota, discard everything
// reaching it from the left, repeat. O(items).
QuotaResult greedy_quota_is(const ColoredIntervalSet& set);

// Maximum set of pairwise disjoint arcs on a circle of `points` points.
// Returns indices into `arcs`.
std::vector<int> max_is_circular_sorted(const std::vector<Span>& arcs,
                                        int points);

}  // namespace idp

#include "idp/independent_set.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <span>

#include "radix.hpp"

namespace idp {

namespace {

// Indices 0..keys.size()-1 stably sorted by key.
std::vector<int> sorted_by_key(const std::vector<int>& keys) {
  std::vector<int> order(keys.size());
  unsigned top = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    order[i] = int(i);
    top = std::max(top, unsigned(keys[i]));
  }
  radix_sort(order, top, [&](int i) { return keys[i]; });
  return order;
}

std::vector<int> item_keys(const ColoredIntervalSet& set, int ColoredInterval::*key) {
  std::vector<int> keys(set.items.size());
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = set.items[i].*key;
  return keys;
}

}  // namespace

bool colors_are_block_ordered(const ColoredIntervalSet& set,
                              QuotaPreconditionViolated* witness) {
  const auto by_left = sorted_by_key(item_keys(set, &ColoredInterval::first));
  int colors = int(set.quotas.size());
  for (const auto& it : set.items) colors = std::max(colors, it.color + 1);
  std::vector<char> closed(colors, 0);
  int current = -1;
  for (std::size_t a = 0; a < by_left.size();) {
    // Items sharing a left endpoint must share a color.
    const auto& head = set.items[by_left[a]];
    const int c = head.color;
    std::size_t b = a;
    for (; b < by_left.size() && set.items[by_left[b]].first == head.first; ++b) {
      if (set.items[by_left[b]].color != c) {
        if (witness) *witness = {c, set.items[by_left[b]].color};
        return false;
      }
    }
    a = b;
    if (c == current) continue;
    if (closed[c]) {
      if (witness) *witness = {current, c};
      return false;
    }
    if (current != -1) closed[current] = 1;
    current = c;
  }
  return true;
}

QuotaResult greedy_quota_is(const ColoredIntervalSet& set) {
  QuotaPreconditionViolated bad;
  if (!colors_are_block_ordered(set, &bad)) return bad;

  const auto by_left = sorted_by_key(item_keys(set, &ColoredInterval::first));
  const auto by_right = sorted_by_key(item_keys(set, &ColoredInterval::last));
  std::vector<int> quota = set.quotas;
  std::vector<char> gone(set.items.size(), 0);
  QuotaSelection chosen;

  // Walk left endpoints from the right; within one endpoint, in item order.
  int unswept = int(by_right.size());  // by_right[unswept..] already cleared
  for (int b = int(by_left.size()); b > 0;) {
    const int j = set.items[by_left[b - 1]].first;
    int a = b;
    while (a > 0 && set.items[by_left[a - 1]].first == j) --a;
    for (int pos = a; pos < b; ++pos) {
      const int idx = by_left[pos];
      if (gone[idx]) continue;
      const int c = set.items[idx].color;
      if (c >= int(quota.size()) || quota[c] <= 0) continue;
      chosen.push_back(idx);
      --quota[c];
      for (; unswept > 0 && set.items[by_right[unswept - 1]].last >= j; --unswept) {
        gone[by_right[unswept - 1]] = 1;
      }
      break;
    }
    b = a;
  }
  for (int c = 0; c < int(quota.size()); ++c) {
    if (quota[c] > 0) return QuotaInfeasible{c};
  }
  return chosen;
}

std::vector<int> max_is_circular_sorted(const std::vector<Span>& arcs,
                                        int points) {
  std::vector<int> proper;
  int any_full = -1;
  for (int i = 0; i < int(arcs.size()); ++i) {
    if (arcs[i].full || span_length(arcs[i], points) >= points) {
      if (any_full < 0) any_full = i;
    } else {
      proper.push_back(i);
    }
  }
  if (proper.empty()) {
    return any_full < 0 ? std::vector<int>{} : std::vector<int>{any_full};
  }

  // Unroll the circle twice: node x < h is arc proper[x], node x + h is the
  // same arc shifted by one turn. Positions are 0-based.
  const int h = int(proper.size());
  const int nodes = 2 * h;
  const int sentinel = nodes;
  std::vector<int> start(nodes + 1), end(nodes + 1);
  for (int x = 0; x < h; ++x) {
    const Span& a = arcs[proper[x]];
    start[x] = a.first - 1;
    end[x] = start[x] + span_length(a, points) - 1;
    start[x + h] = start[x] + points;
    end[x + h] = end[x] + points;
  }
  end[sentinel] = std::numeric_limits<int>::max();

  // Nodes by start, then suffix argmin of end.
  const auto order = sorted_by_key(std::vector<int>(start.begin(), start.end() - 1));
  std::vector<int> best_from(nodes + 1, sentinel);
  for (int pos = nodes - 1; pos >= 0; --pos) {
    const int x = order[pos];
    const int prev = best_from[pos + 1];
    best_from[pos] = end[x] < end[prev] ? x : prev;
  }
  // next[x]: the earliest-ending node starting after x ends.
  std::vector<int> next(nodes + 1, sentinel);
  {
    const auto by_end = sorted_by_key(std::vector<int>(end.begin(), end.end() - 1));
    int pos = 0;
    for (int x : by_end) {
      while (pos < nodes && start[order[pos]] <= end[x]) ++pos;
      next[x] = best_from[pos];
    }
  }

  int levels = 1;
  while ((1 << levels) < nodes + 1) ++levels;
  std::vector<std::vector<int>> jump(levels, std::vector<int>(nodes + 1));
  jump[0] = next;
  for (int k = 1; k < levels; ++k) {
    for (int x = 0; x <= nodes; ++x) jump[k][x] = jump[k - 1][jump[k - 1][x]];
  }

  int best_node = 0;
  int best_count = 0;
  for (int x = 0; x < h; ++x) {
    const int limit = start[x] + points;  // must end before x comes around
    int at = x;
    int count = 1;
    for (int k = levels - 1; k >= 0; --k) {
      const int y = jump[k][at];
      if (y != sentinel && end[y] < limit) {
        at = y;
        count += 1 << k;
      }
    }
    if (count > best_count) {
      best_count = count;
      best_node = x;
    }
  }

  std::vector<int> result;
  const int limit = start[best_node] + points;
  for (int at = best_node; at != sentinel && end[at] < limit;
       at = jump[0][at]) {
    result.push_back(proper[at % h]);
  }
  assert(int(result.size()) == best_count);
  return result;
}

}  // namespace idp

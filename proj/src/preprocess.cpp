// Preprocessing: Steps 1-8 and the small-k shortcut used on circles.

#include <algorithm>
#include <cstdint>
#include <deque>

#include "idp/solver.hpp"

namespace idp {

namespace {

// Calls fn(x) once for every live vertex of an interval model adjacent to
// both a and b, using the covering-point buckets.
template <typename Fn>
void for_each_common_neighbor_by_buckets(WorkingState& st, Vertex a, Vertex b,
                                         std::vector<int>& stamp, int tag,
                                         Fn&& fn) {
  const auto& rep = st.rep();
  const auto& buckets = st.buckets();
  auto visit = [&](Vertex x) {
    if (x == a || x == b || !st.live(x) || stamp[x] == tag) return;
    stamp[x] = tag;
    fn(x);
  };
  const int lo = std::max(rep.left[a], rep.left[b]);
  const int hi = std::min(rep.right[a], rep.right[b]);
  if (lo <= hi) {
    // Two intersecting intervals: a common neighbor meets their overlap.
    for (int p = lo; p <= hi; ++p) {
      for (Vertex x : buckets.bucket(p)) visit(x);
    }
    return;
  }
  // Disjoint: a common neighbor covers the whole gap between them.
  const Vertex first = rep.right[a] < rep.left[b] ? a : b;
  const Vertex second = first == a ? b : a;
  for (Vertex x : buckets.bucket(rep.right[first])) {
    if (covers(rep, x, rep.left[second])) visit(x);
  }
}

template <typename Fn>
void for_each_common_neighbor_by_scan(const WorkingState& st, Vertex a,
                                      Vertex b, Fn&& fn) {
  const auto& adj = st.adjacency();
  if (adj.degree(b) < adj.degree(a)) std::swap(a, b);
  for (Vertex x : adj.neighbors(a)) {
    if (st.live(x) && adjacent(st.rep(), x, b)) fn(x);
  }
}

}  // namespace

void step1_prune_heavy(WorkingState& st) {
  const int n = st.instance().n();
  std::vector<std::uint8_t> hits(n, 0);  // saturates at 3
  for (Vertex t = 0; t < n; ++t) {
    if (!st.live(t) || !st.is_terminal_vertex(t)) continue;
    for (Vertex x : st.adjacency().neighbors(t)) {
      if (!st.is_terminal_vertex(x) && hits[x] < 3) ++hits[x];
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (hits[x] >= 3 && st.usable(x)) st.kill(x);
  }
}

std::optional<NoCertificate> step2_step3_multipairs(WorkingState& st) {
  const auto& inst = st.instance();
  std::vector<int> multi;
  for (int i : st.active_pairs()) {
    const auto& p = inst.pairs[i];
    if (p.requirement < 2) continue;
    if (!adjacent(inst.rep, p.s, p.t)) return NoCertificate{"2", i};
    multi.push_back(i);
  }
  if (multi.empty()) return std::nullopt;

  std::vector<int> stamp(inst.n(), -1);
  for (int i : multi) {
    const auto& p = inst.pairs[i];
    std::vector<Vertex> found;
    for_each_common_neighbor_by_buckets(st, p.s, p.t, stamp, i, [&](Vertex x) {
      if (!st.is_terminal_vertex(x)) found.push_back(x);
    });
    for (Vertex x : found) {
      st.candidates().push_back(
          Candidate{i, vertex_span(inst.rep, x), p.s, p.t, {x}, '3'});
      st.kill(x);
    }
  }
  return std::nullopt;
}

void step4_isolated_terminals(WorkingState& st) {
  const auto& inst = st.instance();
  const int n = inst.n();
  std::vector<char> in_z(n, 0);
  for (int i : st.active_pairs()) {
    in_z[inst.pairs[i].s] = 1;
    in_z[inst.pairs[i].t] = 1;
  }
  for (int i : st.active_pairs()) {
    const auto& p = inst.pairs[i];
    if (!adjacent(inst.rep, p.s, p.t)) {
      in_z[p.s] = 0;
      in_z[p.t] = 0;
    }
  }
  for (Vertex z = 0; z < n; ++z) {
    if (!in_z[z]) continue;
    for (Vertex x : st.adjacency().neighbors(z)) {
      if (st.usable(x)) st.kill(x);
    }
  }
  for (int i : st.active_pairs()) {
    const auto& p = inst.pairs[i];
    if (in_z[p.s] || in_z[p.t]) st.commit_terminal_path(i);
  }
  for (Vertex z = 0; z < n; ++z) {
    if (in_z[z]) st.kill(z);
  }
}

void step5_adjacent_pairs(WorkingState& st) {
  const auto& inst = st.instance();
  std::vector<int> close;
  for (int i : st.active_pairs()) {
    const auto& p = inst.pairs[i];
    if (adjacent(inst.rep, p.s, p.t)) close.push_back(i);
  }
  std::vector<Vertex> doomed;
  for (int i : close) {
    const auto& p = inst.pairs[i];
    for_each_common_neighbor_by_scan(st, p.s, p.t, [&](Vertex x) {
      if (!st.is_terminal_vertex(x)) doomed.push_back(x);
    });
    st.commit_terminal_path(i);
  }
  for (Vertex x : doomed) st.kill(x);
}

void step4_step5_adjacent_pairs(WorkingState& st) {
  step4_isolated_terminals(st);
  step5_adjacent_pairs(st);
}

std::optional<Outcome> step5plus_small_k(WorkingState& st) {
  const auto remaining = st.active_pairs();
  if (remaining.size() >= 2) return std::nullopt;
  Solution sol;
  sol.paths = st.committed_paths();
  if (remaining.empty()) return sol;

  const int i = remaining.front();
  const auto& p = st.instance().pairs[i];
  const int n = st.instance().n();
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{p.s};
  seen[p.s] = 1;
  bool reached = false;
  while (!queue.empty() && !reached) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : st.adjacency().neighbors(x)) {
      if (seen[y] || !st.live(y)) continue;
      if (y != p.t && !st.usable(y)) continue;
      seen[y] = 1;
      parent[y] = x;
      if (y == p.t) {
        reached = true;
        break;
      }
      queue.push_back(y);
    }
  }
  if (!reached) return NoCertificate{"5+", i};
  PairPath path{i, {}};
  for (Vertex x = p.t; x != kNoVertex; x = parent[x]) path.vertices.push_back(x);
  std::reverse(path.vertices.begin(), path.vertices.end());
  sol.paths.push_back(std::move(path));
  return sol;
}

std::optional<NoCertificate> step6_check_triples(WorkingState& st) {
  const auto& inst = st.instance();
  std::vector<int> load(inst.n(), 0);
  for (int i : st.active_pairs()) {
    for (Vertex v : {inst.pairs[i].s, inst.pairs[i].t}) {
      if (++load[v] >= 3) return NoCertificate{"6", -1, v};
    }
  }
  return std::nullopt;
}

std::optional<NoCertificate> step7_order_terminals(WorkingState& st) {
  const auto& inst = st.instance();
  const auto& rep = inst.rep;
  const bool circle = rep.kind == Kind::Circular;
  st.order().clear();
  const auto remaining = st.active_pairs();
  if (remaining.empty()) return std::nullopt;

  // Terminal vertices in increasing order of left endpoint (bucket scan).
  std::vector<char> is_rep(inst.n(), 0);
  for (int i : remaining) {
    is_rep[inst.pairs[i].s] = 1;
    is_rep[inst.pairs[i].t] = 1;
  }
  std::vector<int> position(inst.n(), -1);
  int q = 0;
  for (int p = 1; p <= rep.points(); ++p) {
    const Vertex v = st.endpoints().owner[p];
    if (st.endpoints().is_left[p] && is_rep[v]) position[v] = q++;
  }

  // Partners must sit in consecutive non-empty buckets; on a circle the
  // last bucket is followed by the first one.
  std::vector<int> slot_owner(q, -1);
  std::vector<OrientedPair> oriented;
  for (int i : remaining) {
    const auto& p = inst.pairs[i];
    const int ps = position[p.s];
    const int pt = position[p.t];
    OrientedPair op{i, kNoVertex, kNoVertex};
    int slot = -1;
    if (circle && q >= 3) {
      if ((pt - ps + q) % q == 1) {
        op.u = p.s, op.v = p.t, slot = ps;
      } else if ((ps - pt + q) % q == 1) {
        op.u = p.t, op.v = p.s, slot = pt;
      }
    } else {
      if (pt - ps == 1) {
        op.u = p.s, op.v = p.t, slot = ps;
      } else if (ps - pt == 1) {
        op.u = p.t, op.v = p.s, slot = pt;
      }
    }
    if (slot < 0 || slot_owner[slot] != -1) return NoCertificate{"7", i};
    slot_owner[slot] = int(oriented.size());
    oriented.push_back(op);
  }

  // Start right after an unused slot so that chains are read in order.
  int start = 0;
  if (circle) {
    for (int j = 0; j < q; ++j) {
      if (slot_owner[j] == -1) {
        start = (j + 1) % q;
        break;
      }
    }
  }
  for (int step = 0; step < q; ++step) {
    const int j = (start + step) % q;
    if (slot_owner[j] != -1) st.order().push_back(oriented[slot_owner[j]]);
  }
  return std::nullopt;
}

void step8_clear_interpair(WorkingState& st) {
  const auto& order = st.order();
  const int k = int(order.size());
  if (k < 2) return;
  // After Step 6 a terminal vertex lies on at most two boundaries, so
  // scanning neighbor lists stays within O(m).
  const int boundaries = st.rep().kind == Kind::Circular ? k : k - 1;
  std::vector<Vertex> doomed;
  for (int i = 0; i < boundaries; ++i) {
    const Vertex a = order[i].v;
    const Vertex b = order[(i + 1) % k].u;
    if (a == b) continue;
    for_each_common_neighbor_by_scan(st, a, b, [&](Vertex x) {
      if (!st.is_terminal_vertex(x)) doomed.push_back(x);
    });
  }
  for (Vertex x : doomed) st.kill(x);
}

}  // namespace idp

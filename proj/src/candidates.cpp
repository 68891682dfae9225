// Step 9: candidate paths for every surviving pair.

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_set>

#include "idp/solver.hpp"

namespace idp {

namespace {

Span witness_span(const Representation& rep, const std::vector<Vertex>& inner) {
  Span span = vertex_span(rep, inner.front());
  if (rep.kind == Kind::Interval) {
    for (Vertex w : inner) {
      span.first = std::min(span.first, rep.left[w]);
      span.last = std::max(span.last, rep.right[w]);
    }
    return span;
  }
  for (std::size_t i = 1; i < inner.size(); ++i) {
    span = span_union(span, vertex_span(rep, inner[i]), rep.points());
  }
  return span;
}

constexpr int kNone = std::numeric_limits<int>::max();

// The terminal vertices each vertex meets, up to two. Step 1 leaves no
// usable vertex meeting three.
class TerminalContacts {
 public:
  explicit TerminalContacts(const WorkingState& st)
      : slots_(st.instance().n(), {kNoVertex, kNoVertex}) {
    for (const auto& tp : st.instance().pairs) {
      for (Vertex z : {tp.s, tp.t}) {
        for (Vertex y : st.adjacency().neighbors(z)) add(y, z);
      }
    }
  }

  // A range meeting a terminal other than u and v can never be part of a
  // solution path, and neither can any path whose range contains it.
  bool clean(Vertex w, Vertex u, Vertex v) const {
    for (Vertex z : slots_[w]) {
      if (z != kNoVertex && z != u && z != v) return false;
    }
    return true;
  }
  bool clean(const std::vector<Vertex>& inner, Vertex u, Vertex v) const {
    return std::all_of(inner.begin(), inner.end(),
                       [&](Vertex w) { return clean(w, u, v); });
  }

 private:
  static constexpr Vertex kMany = -2;

  void add(Vertex y, Vertex z) {
    auto& s = slots_[y];
    if (s[0] == z || s[1] == z) return;
    if (s[0] == kNoVertex) {
      s[0] = z;
    } else if (s[1] == kNoVertex) {
      s[1] = z;
    } else {
      s[0] = kMany;
    }
  }

  std::vector<std::array<Vertex, 2>> slots_;
};

using SpanSet = std::unordered_set<long long>;

long long span_key(const Span& s) {
  return s.full ? -1 : (static_cast<long long>(s.first) << 32) | s.last;
}

// u-x-y-v candidates: x meets u past its right end, y reaches v's left end
// and, among those meeting x on the near side, ends first.
void emit_two_step_candidates(WorkingState& st, const OrientedPair& op,
                              const TerminalContacts& contacts, SpanSet& emitted) {
  const auto& rep = st.rep();
  const int points = st.points();
  const Vertex u = op.u;
  const Vertex v = op.v;
  for (Vertex x : st.adjacency().neighbors(u)) {
    if (!st.usable(x) || adjacent(rep, x, v) || !covers(rep, x, rep.right[u])) {
      continue;
    }
    const int x_reach = cw_offset(rep.right[u], rep.right[x], points);
    Vertex best = kNoVertex;
    int best_key = kNone;
    for (Vertex y : st.adjacency().neighbors(x)) {
      if (!st.usable(y) || !adjacent(rep, y, v) || adjacent(rep, y, u)) continue;
      if (!covers(rep, y, rep.left[v])) continue;
      if (cw_offset(rep.right[u], rep.left[y], points) > x_reach) continue;
      const int key = cw_offset(rep.left[v], rep.right[y], points);
      if (key < best_key) {
        best_key = key;
        best = y;
      }
    }
    if (best == kNoVertex) continue;
    std::vector<Vertex> inner{x, best};
    if (!contacts.clean(inner, u, v)) continue;
    const Span span = witness_span(rep, inner);
    emitted.insert(span_key(span));
    st.candidates().push_back(
        Candidate{op.pair, span, u, v, std::move(inner), 'b'});
  }
}

// Buffers shared by all pairs.
struct Scratch {
  explicit Scratch(int n) : region_tag(n, -1), visited(n, 0), bfs_index(n, -1) {}
  std::vector<int> region_tag;
  std::vector<char> visited;
  std::vector<int> bfs_index;
  std::vector<Vertex> region;
  std::vector<Vertex> comp;
  std::vector<Vertex> queue;
  std::vector<Vertex> parent;
};

// One candidate per component of the live graph strictly between u and v.
void emit_component_candidates(WorkingState& st, const OrientedPair& op,
                               const TerminalContacts& contacts,
                               const SpanSet& two_step, Scratch& s) {
  auto& region_tag = s.region_tag;
  auto& visited = s.visited;
  auto& bfs_index = s.bfs_index;
  const auto& rep = st.rep();
  const auto& adj = st.adjacency();
  const int points = st.points();
  const Vertex u = op.u;
  const Vertex v = op.v;
  const int origin = rep.right[u];
  const int gap = cw_offset(origin, rep.left[v], points);
  auto in_region = [&](Vertex y) {
    return region_tag[y] == op.pair && st.live(y);
  };

  auto& region = s.region;
  region.clear();
  for (int off = 1; off < gap; ++off) {
    const int p = (origin - 1 + off) % points + 1;
    if (!st.endpoints().is_left[p]) continue;
    const Vertex w = st.endpoints().owner[p];
    if (!st.usable(w)) continue;
    const int end_off = cw_offset(origin, rep.right[w], points);
    if (end_off > off && end_off < gap) {
      region_tag[w] = op.pair;
      region.push_back(w);
    }
  }

  for (Vertex root : region) {
    if (visited[root]) continue;
    auto& comp = s.comp;
    comp.assign(1, root);
    visited[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex y : adj.neighbors(comp[head])) {
        if (in_region(y) && !visited[y]) {
          visited[y] = 1;
          comp.push_back(y);
        }
      }
    }
    Vertex leftmost = comp.front();
    Vertex rightmost = comp.front();
    for (Vertex w : comp) {
      if (cw_offset(origin, rep.left[w], points) <
          cw_offset(origin, rep.left[leftmost], points)) {
        leftmost = w;
      }
      if (cw_offset(origin, rep.right[w], points) >
          cw_offset(origin, rep.right[rightmost], points)) {
        rightmost = w;
      }
    }

    Vertex entry = kNoVertex;  // common neighbor of u and leftmost
    int entry_key = kNone;
    for (Vertex x : adj.neighbors(leftmost)) {
      if (!st.usable(x) || !adjacent(rep, x, u)) continue;
      const int key = cw_offset(rep.left[x], origin, points);
      if (key < entry_key) {
        entry_key = key;
        entry = x;
      }
    }
    Vertex exit = kNoVertex;  // common neighbor of v and rightmost
    int exit_key = kNone;
    for (Vertex y : adj.neighbors(rightmost)) {
      if (!st.usable(y) || !adjacent(rep, y, v)) continue;
      const int key = cw_offset(rep.left[v], rep.right[y], points);
      if (key < exit_key) {
        exit_key = key;
        exit = y;
      }
    }
    if (entry == kNoVertex || exit == kNoVertex) continue;

    std::vector<Vertex> inner{entry};
    if (!adjacent(rep, entry, exit)) {
      // Shortest path inside the component from entry's neighbors to exit's
      // neighbors: chordless, and touching entry and exit only at its ends.
      auto& queue = s.queue;
      auto& parent = s.parent;
      queue.clear();
      parent.clear();
      for (Vertex w : comp) {
        if (adjacent(rep, w, entry)) {
          bfs_index[w] = int(queue.size());
          queue.push_back(w);
          parent.push_back(kNoVertex);
        }
      }
      Vertex target = kNoVertex;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex w = queue[head];
        if (adjacent(rep, w, exit)) {
          target = w;
          break;
        }
        for (Vertex y : adj.neighbors(w)) {
          if (!in_region(y) || bfs_index[y] != -1) continue;
          bfs_index[y] = int(queue.size());
          queue.push_back(y);
          parent.push_back(w);
        }
      }
      std::vector<Vertex> middle;
      for (Vertex w = target; w != kNoVertex; w = parent[bfs_index[w]]) {
        middle.push_back(w);
      }
      for (Vertex w : queue) bfs_index[w] = -1;
      if (target == kNoVertex) continue;
      inner.insert(inner.end(), middle.rbegin(), middle.rend());
    }
    inner.push_back(exit);
    if (!contacts.clean(inner, u, v)) continue;

    const Span span = witness_span(rep, inner);
    if (two_step.count(span_key(span))) continue;
    st.candidates().push_back(
        Candidate{op.pair, span, u, v, std::move(inner), 'c'});
  }
}

}  // namespace

void step9a_common_neighbors(WorkingState& st) {
  const auto& rep = st.rep();
  const bool circle = rep.kind == Kind::Circular;
  const TerminalContacts contacts(st);
  for (const auto& op : st.order()) {
    std::vector<Vertex> common;
    for (Vertex w : st.adjacency().neighbors(op.u)) {
      if (st.usable(w) && adjacent(rep, w, op.v)) common.push_back(w);
    }
    for (Vertex w : common) {
      // On a circle a common neighbor meeting u and v from the far side
      // is deleted without becoming a candidate.
      const bool near = !circle || (covers(rep, w, rep.right[op.u]) &&
                                    covers(rep, w, rep.left[op.v]));
      if (near && contacts.clean(w, op.u, op.v)) {
        st.candidates().push_back(
            Candidate{op.pair, vertex_span(rep, w), op.u, op.v, {w}, 'a'});
      }
      st.kill(w);
    }
  }
}

void step9bc_connector_candidates(WorkingState& st) {
  Scratch scratch(st.instance().n());
  const TerminalContacts contacts(st);
  SpanSet two_step;
  for (const auto& op : st.order()) {
    two_step.clear();
    emit_two_step_candidates(st, op, contacts, two_step);
    emit_component_candidates(st, op, contacts, two_step, scratch);
  }
}

void step9_generate_candidates(WorkingState& st) {
  step9a_common_neighbors(st);
  step9bc_connector_candidates(st);
}

}  // namespace idp

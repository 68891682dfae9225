#include <algorithm>
#include <stdexcept>

#include "idp/independent_set.hpp"
#include "idp/solver.hpp"
#include "radix.hpp"

namespace idp {

namespace {

Solution assemble(const WorkingState& st, const std::vector<int>& chosen) {
  Solution sol;
  sol.paths = st.committed_paths();
  for (int idx : chosen) sol.paths.push_back(st.to_pair_path(st.candidates()[idx]));
  std::stable_sort(sol.paths.begin(), sol.paths.end(),
                   [](const PairPath& a, const PairPath& b) { return a.pair < b.pair; });
  return sol;
}

void record(const WorkingState& st, SolveTrace* trace) {
  if (!trace) return;
  trace->candidates = st.candidates();
  trace->order = st.order();
}

// Copy of the instance with vertices numbered by left endpoint, so that
// ranges close on the line are close in memory. original[w] maps back.
struct Relabeled {
  Instance inst;
  std::vector<Vertex> original;
};

Relabeled relabel_by_left(const Instance& in) {
  const int n = in.n();
  const auto& rep = in.rep;
  struct Range {
    int left;
    int right;
    Vertex v;
  };
  std::vector<Range> ranges(n);
  for (Vertex v = 0; v < n; ++v) ranges[v] = {rep.left[v], rep.right[v], v};
  radix_sort(ranges, unsigned(rep.points()), [](const Range& r) { return r.left; });

  Relabeled out;
  out.original.resize(n);
  out.inst.rep.kind = rep.kind;
  out.inst.rep.left.resize(n);
  out.inst.rep.right.resize(n);
  for (Vertex w = 0; w < n; ++w) {
    out.original[w] = ranges[w].v;
    out.inst.rep.left[w] = ranges[w].left;
    out.inst.rep.right[w] = ranges[w].right;
  }

  // Terminals find their new ids by merging their left ends into the
  // sorted order.
  out.inst.pairs = in.pairs;
  struct Query {
    int left;
    Vertex* slot;
  };
  std::vector<Query> queries;
  queries.reserve(2 * out.inst.pairs.size());
  for (auto& p : out.inst.pairs) {
    queries.push_back({rep.left[p.s], &p.s});
    queries.push_back({rep.left[p.t], &p.t});
  }
  radix_sort(queries, unsigned(rep.points()), [](const Query& q) { return q.left; });
  Vertex w = 0;
  for (const auto& q : queries) {
    while (out.inst.rep.left[w] != q.left) ++w;
    *q.slot = w;
  }
  return out;
}

Outcome restore(const Relabeled& r, Outcome out, SolveTrace* trace) {
  const auto back = [&r](Vertex& v) {
    if (v != kNoVertex) v = r.original[v];
  };
  if (auto* sol = std::get_if<Solution>(&out)) {
    for (auto& p : sol->paths) {
      for (auto& v : p.vertices) back(v);
    }
  } else {
    auto& cert = std::get<NoCertificate>(out);
    if (cert.vertex >= 0) back(cert.vertex);
  }
  if (trace) {
    for (auto& c : trace->candidates) {
      back(c.from);
      back(c.to);
      for (auto& w : c.witness) back(w);
    }
    for (auto& op : trace->order) {
      back(op.u);
      back(op.v);
    }
  }
  return out;
}

Outcome run_interval(const Instance& inst, SolveTrace* trace) {
  WorkingState st(inst);
  step1_prune_heavy(st);
  if (auto no = step2_step3_multipairs(st)) return *no;
  step4_step5_adjacent_pairs(st);
  if (trace) trace->active_after_preprocessing = st.active_count();
  if (auto no = step6_check_triples(st)) return *no;
  if (auto no = step7_order_terminals(st)) return *no;
  step8_clear_interpair(st);
  step9_generate_candidates(st);
  record(st, trace);
  return step10_select(st, trace ? &trace->selected : nullptr);
}

Outcome run_circular(const Instance& inst, SolveTrace* trace) {
  WorkingState st(inst);
  step1_prune_heavy(st);
  step4_step5_adjacent_pairs(st);
  if (trace) trace->active_after_preprocessing = st.active_count();
  if (auto done = step5plus_small_k(st)) return *done;
  if (auto no = step6_check_triples(st)) return *no;
  if (auto no = step7_order_terminals(st)) return *no;
  step8_clear_interpair(st);
  step9_generate_candidates(st);
  record(st, trace);
  return step10star_select(st, trace ? &trace->selected : nullptr);
}

}  // namespace

Outcome step10_select(WorkingState& st, std::vector<int>* chosen) {
  ColoredIntervalSet set;
  set.points = st.points();
  set.quotas.resize(st.instance().k());
  for (int i = 0; i < st.instance().k(); ++i) set.quotas[i] = st.quota(i);
  const auto& cands = st.candidates();
  set.items.reserve(cands.size());
  for (int c = 0; c < int(cands.size()); ++c) {
    set.items.push_back({cands[c].color, cands[c].span.first, cands[c].span.last, c});
  }
  auto result = greedy_quota_is(set);
  if (auto* bad = std::get_if<QuotaPreconditionViolated>(&result)) {
    throw std::logic_error("candidate colors interleave: " +
                           std::to_string(bad->color_a + 1) + " and " +
                           std::to_string(bad->color_b + 1));
  }
  if (auto* miss = std::get_if<QuotaInfeasible>(&result)) {
    return NoCertificate{"10", miss->color};
  }
  const auto& picked = std::get<QuotaSelection>(result);
  if (chosen) *chosen = picked;
  return assemble(st, picked);
}

Outcome step10star_select(WorkingState& st, std::vector<int>* chosen) {
  const auto& cands = st.candidates();
  std::vector<Span> arcs;
  arcs.reserve(cands.size());
  for (const auto& c : cands) arcs.push_back(c.span);
  const auto picked = max_is_circular_sorted(arcs, st.points());
  const int need = int(st.order().size());
  if (int(picked.size()) < need) {
    return NoCertificate{"10*", -1, -1,
                         "max_is=" + std::to_string(picked.size())};
  }
  // Arcs of one pair all contain the gap between its representatives, so
  // an independent set of size k' takes exactly one arc per pair.
  std::vector<int> per_color(st.instance().k(), 0);
  for (int idx : picked) {
    if (++per_color[cands[idx].color] > 1 || int(picked.size()) > need) {
      throw std::logic_error("independent set holds two arcs of pair " +
                             std::to_string(cands[idx].color + 1));
    }
  }
  if (chosen) *chosen = picked;
  return assemble(st, picked);
}

Outcome solve_interval(const Instance& inst, SolveTrace* trace) {
  const auto r = relabel_by_left(inst);
  return restore(r, run_interval(r.inst, trace), trace);
}

Outcome solve_circular(const Instance& inst, SolveTrace* trace) {
  const auto r = relabel_by_left(inst);
  return restore(r, run_circular(r.inst, trace), trace);
}

Outcome solve(const Instance& inst, SolveTrace* trace) {
  return inst.rep.kind == Kind::Interval ? solve_interval(inst, trace)
                                         : solve_circular(inst, trace);
}

}  // namespace idp

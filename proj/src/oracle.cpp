#include "idp/oracle.hpp"

#include <algorithm>
#include <set>

namespace idp {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InnerChord: return "InnerChord";
    case ViolationKind::IllegalSharedVertex: return "IllegalSharedVertex";
    case ViolationKind::IllegalAdjacency: return "IllegalAdjacency";
    case ViolationKind::QuotaMismatch: return "QuotaMismatch";
    case ViolationKind::NotAPath: return "NotAPath";
    case ViolationKind::WrongEndpoints: return "WrongEndpoints";
  }
  return "?";
}

std::string Violation::describe(const Representation& rep) const {
  std::string out = to_string(kind);
  if (pair >= 0) out += " pair=" + std::to_string(pair + 1);
  if (!paths.empty()) {
    out += " paths=";
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(paths[i] + 1);
    }
  }
  if (!vertices.empty()) {
    out += " vertices=";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i) out += ',';
      const Vertex v = vertices[i];
      out += v >= 0 && v < rep.n() ? rep.name(v) : std::to_string(v);
    }
  }
  return out;
}

namespace {

// Orientation-free form of a path, used to tell paths apart.
std::vector<Vertex> canonical(std::vector<Vertex> p) {
  if (!p.empty() && p.back() < p.front()) std::reverse(p.begin(), p.end());
  return p;
}

bool is_end(const std::vector<Vertex>& p, Vertex x) {
  return p.front() == x || p.back() == x;
}

}  // namespace

std::vector<Violation> verify_mutually_induced(const Instance& inst,
                                               const Solution& sol) {
  const auto& rep = inst.rep;
  const int n = inst.n();
  const int count = int(sol.paths.size());
  std::vector<Violation> out;
  std::vector<char> sound(count, 0);

  for (int i = 0; i < count; ++i) {
    const auto& pp = sol.paths[i];
    const auto& p = pp.vertices;
    bool ok = p.size() >= 2;
    for (Vertex x : p) ok = ok && x >= 0 && x < n;
    if (ok) {
      std::vector<Vertex> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (ok) {
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        if (!adjacent(rep, p[j], p[j + 1])) {
          out.push_back({ViolationKind::NotAPath, {i}, {p[j], p[j + 1]}});
          ok = false;
        }
      }
    } else {
      out.push_back({ViolationKind::NotAPath, {i}, {}});
    }
    if (!ok) continue;

    if (pp.pair < 0 || pp.pair >= inst.k()) {
      out.push_back({ViolationKind::WrongEndpoints, {i}, {p.front(), p.back()}});
      continue;
    }
    const auto& tp = inst.pairs[pp.pair];
    const bool ends_ok = (p.front() == tp.s && p.back() == tp.t) ||
                         (p.front() == tp.t && p.back() == tp.s);
    if (!ends_ok) {
      out.push_back({ViolationKind::WrongEndpoints, {i}, {p.front(), p.back()}});
      continue;
    }
    sound[i] = 1;
    const int len = int(p.size());
    for (int a = 0; a < len; ++a) {
      for (int b = a + 2; b < len; ++b) {
        if (a == 0 && b == len - 1) continue;
        if (adjacent(rep, p[a], p[b])) {
          out.push_back({ViolationKind::InnerChord, {i}, {p[a], p[b]}});
        }
      }
    }
  }

  for (int i = 0; i < count; ++i) {
    if (!sound[i]) continue;
    const auto& p = sol.paths[i].vertices;
    for (int j = i + 1; j < count; ++j) {
      if (!sound[j]) continue;
      const auto& q = sol.paths[j].vertices;
      for (Vertex x : p) {
        if (std::find(q.begin(), q.end(), x) != q.end() &&
            !(is_end(p, x) && is_end(q, x))) {
          out.push_back({ViolationKind::IllegalSharedVertex, {i, j}, {x}});
        }
      }
      // Inner vertex of one path next to a vertex of the other.
      auto scan = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                      int ia, int ib) {
        for (std::size_t s = 1; s + 1 < a.size(); ++s) {
          for (Vertex y : b) {
            if (adjacent(rep, a[s], y) && !(is_end(a, y) && is_end(b, y))) {
              out.push_back({ViolationKind::IllegalAdjacency, {ia, ib}, {a[s], y}});
            }
          }
        }
      };
      scan(p, q, i, j);
      scan(q, p, j, i);
    }
  }

  std::vector<std::set<std::vector<Vertex>>> served(inst.k());
  for (int i = 0; i < count; ++i) {
    if (sound[i]) served[sol.paths[i].pair].insert(canonical(sol.paths[i].vertices));
  }
  for (int i = 0; i < inst.k(); ++i) {
    if (int(served[i].size()) != inst.pairs[i].requirement) {
      Violation v{ViolationKind::QuotaMismatch, {}, {}};
      v.pair = i;
      out.push_back(v);
    }
  }
  return out;
}

PathEnumeration enumerate_induced_paths(const Representation& rep, Vertex u,
                                        Vertex v,
                                        const std::vector<char>& inner_ok,
                                        std::size_t cap) {
  PathEnumeration result;
  const int n = rep.n();
  std::vector<Vertex> path{u};
  std::vector<char> on_path(n, 0);
  on_path[u] = 1;

  // A new vertex may touch only the current last vertex, except that v may
  // also touch u.
  auto fits = [&](Vertex w) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (i == 0 && w == v) continue;
      if (adjacent(rep, path[i], w)) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self) -> void {
    if (result.overflow) return;
    const Vertex last = path.back();
    // An inner vertex adjacent to v must be followed by v.
    const bool must_close = last != u && adjacent(rep, last, v);
    for (Vertex w = 0; w < n; ++w) {
      if (on_path[w] || !adjacent(rep, last, w)) continue;
      if (w == v) {
        if (!fits(w)) continue;
        if (result.paths.size() == cap) {
          result.overflow = true;
          return;
        }
        result.paths.push_back(path);
        result.paths.back().push_back(v);
        continue;
      }
      if (must_close || !inner_ok[w] || !fits(w)) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self);
      on_path[w] = 0;
      path.pop_back();
      if (result.overflow) return;
    }
  };
  dfs(dfs);
  return result;
}

std::vector<std::vector<Vertex>> pair_paths(const Instance& inst, int pair,
                                            const std::vector<char>* allowed,
                                            std::size_t cap) {
  const int n = inst.n();
  const auto& tp = inst.pairs[pair];
  std::vector<char> terminal(n, 0);
  for (const auto& p : inst.pairs) terminal[p.s] = terminal[p.t] = 1;
  std::vector<char> ok(n, 0);
  for (Vertex w = 0; w < n; ++w) {
    if (terminal[w] || (allowed && !(*allowed)[w])) continue;
    bool clean = true;
    for (Vertex z = 0; z < n && clean; ++z) {
      if (terminal[z] && z != tp.s && z != tp.t && adjacent(inst.rep, w, z)) {
        clean = false;
      }
    }
    ok[w] = clean;
  }
  auto found = enumerate_induced_paths(inst.rep, tp.s, tp.t, ok, cap);
  if (found.overflow) throw BoundExceeded("too many induced paths");
  return std::move(found.paths);
}

namespace {

using Mask = std::uint64_t;

struct PathBits {
  Mask all = 0;
  Mask inner = 0;
  Mask ends = 0;
  Mask inner_nbrs = 0;
};

bool compatible(const PathBits& a, const PathBits& b) {
  const Mask both_ends = a.ends & b.ends;
  if ((a.all & b.all) & ~both_ends) return false;
  if ((a.inner_nbrs & b.all) & ~both_ends) return false;
  if ((b.inner_nbrs & a.all) & ~both_ends) return false;
  return true;
}

}  // namespace

bool brute_select(const Instance& inst, const std::vector<PathMenu>& menus,
                  Solution* out) {
  const int n = inst.n();
  const int k = inst.k();
  if (n > 64) throw BoundExceeded("brute_select handles at most 64 vertices");
  std::vector<Mask> nbr(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (adjacent(inst.rep, x, y)) nbr[x] |= Mask{1} << y;
    }
  }
  auto bits_of = [&](const std::vector<Vertex>& p) {
    PathBits b;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Mask m = Mask{1} << p[i];
      b.all |= m;
      if (i == 0 || i + 1 == p.size()) {
        b.ends |= m;
      } else {
        b.inner |= m;
        b.inner_nbrs |= nbr[p[i]];
      }
    }
    return b;
  };

  struct Option {
    int pair;
    std::vector<Vertex> path;
    PathBits bits;
  };
  std::vector<Option> chosen;
  std::vector<std::vector<Option>> pool(k);
  std::vector<int> need(k, 0);

  for (int i = 0; i < k; ++i) {
    std::set<std::vector<Vertex>> seen;
    int forced = 0;
    for (const auto& p : menus[i].forced) {
      if (!seen.insert(canonical(p)).second) continue;
      chosen.push_back({i, p, bits_of(p)});
      ++forced;
    }
    for (const auto& p : menus[i].optional) {
      if (!seen.insert(canonical(p)).second) continue;
      pool[i].push_back({i, p, bits_of(p)});
    }
    need[i] = inst.pairs[i].requirement - forced;
    if (need[i] < 0 || need[i] > int(pool[i].size())) return false;
  }
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      if (!compatible(chosen[a].bits, chosen[b].bits)) return false;
    }
  }

  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pool[a].size() < pool[b].size();
  });

  auto fits = [&](const PathBits& b) {
    for (const auto& c : chosen) {
      if (!compatible(c.bits, b)) return false;
    }
    return true;
  };

  // Fill pair order[slot], taking pool entries from index `from` on.
  auto search = [&](auto&& self, int slot, int left, std::size_t from) -> bool {
    if (slot == k) return true;
    const int i = order[slot];
    if (left == 0) {
      return self(self, slot + 1, slot + 1 < k ? need[order[slot + 1]] : 0, 0);
    }
    for (std::size_t j = from; j + left <= pool[i].size(); ++j) {
      if (!fits(pool[i][j].bits)) continue;
      chosen.push_back(pool[i][j]);
      if (self(self, slot, left - 1, j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0, k > 0 ? need[order[0]] : 0, 0)) return false;

  if (out) {
    out->paths.clear();
    for (const auto& c : chosen) out->paths.push_back({c.pair, c.path});
    std::stable_sort(out->paths.begin(), out->paths.end(),
                     [](const PairPath& a, const PairPath& b) { return a.pair < b.pair; });
    for (auto& p : out->paths) {
      if (p.vertices.front() != inst.pairs[p.pair].s) {
        std::reverse(p.vertices.begin(), p.vertices.end());
      }
    }
  }
  return true;
}

bool brute_solve(const Instance& inst, Solution* out, const BruteBounds& bounds) {
  if (inst.n() > bounds.max_n) {
    throw BoundExceeded("n=" + std::to_string(inst.n()) + " exceeds " +
                        std::to_string(bounds.max_n));
  }
  if (inst.total_requirement() > bounds.max_total_requirement) {
    throw BoundExceeded("total requirement " +
                        std::to_string(inst.total_requirement()) + " exceeds " +
                        std::to_string(bounds.max_total_requirement));
  }
  std::vector<PathMenu> menus(inst.k());
  for (int i = 0; i < inst.k(); ++i) {
    menus[i].optional = pair_paths(inst, i, nullptr, bounds.path_cap);
  }
  return brute_select(inst, menus, out);
}

int brute_max_is(const std::vector<Span>& arcs) {
  const int h = int(arcs.size());
  if (h > 20) throw BoundExceeded("brute_max_is handles at most 20 arcs");
  std::vector<std::uint32_t> clash(h, 0);
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) {
      if (a != b && spans_intersect(arcs[a], arcs[b])) clash[a] |= 1u << b;
    }
  }
  // Branch on the lowest remaining arc: skip it, or take it and drop its
  // neighbors.
  auto best = [&](auto&& self, std::uint32_t rest) -> int {
    if (rest == 0) return 0;
    const int a = __builtin_ctz(rest);
    const std::uint32_t without = rest & ~(1u << a);
    const int take = 1 + self(self, without & ~clash[a]);
    if (take > __builtin_popcount(without)) return take;
    return std::max(take, self(self, without));
  };
  return best(best, h == 32 ? ~0u : (1u << h) - 1);
}

bool brute_quota_feasible(const ColoredIntervalSet& set) {
  const int h = int(set.items.size());
  if (h > 24) throw BoundExceeded("brute_quota_feasible handles at most 24 items");
  std::vector<int> left = set.quotas;
  long long need = 0;
  for (int q : left) need += q;
  std::vector<Span> spans;
  for (const auto& it : set.items) spans.push_back({it.first, it.last, false});

  std::vector<int> taken;
  auto search = [&](auto&& self, int from) -> bool {
    if (need == 0) return true;
    if (h - from < need) return false;
    for (int a = from; a < h; ++a) {
      const int c = set.items[a].color;
      if (left[c] == 0) continue;
      bool free = true;
      for (int b : taken) free = free && !spans_intersect(spans[a], spans[b]);
      if (!free) continue;
      taken.push_back(a);
      --left[c];
      --need;
      const bool hit = self(self, a + 1);
      ++left[c];
      ++need;
      taken.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace idp

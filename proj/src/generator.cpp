#include "idp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

namespace idp {

namespace {

// Distributions written out by hand so that streams match across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double unit() { return double(engine_() >> 11) * 0x1.0p-53; }
  int below(int m) { return int(engine_() % std::uint64_t(m)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (int i = int(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[below(i + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Ranges with real endpoints in [0, 1); on a circle `end` may be smaller
// than `start`.
struct RealRange {
  double start;
  double end;
};

Representation compress(Kind kind, const std::vector<RealRange>& ranges) {
  const int n = int(ranges.size());
  std::vector<std::pair<double, int>> ends;  // value, 2*v + (is right)
  ends.reserve(2 * n);
  for (int v = 0; v < n; ++v) {
    ends.emplace_back(ranges[v].start, 2 * v);
    ends.emplace_back(ranges[v].end, 2 * v + 1);
  }
  std::sort(ends.begin(), ends.end());
  Representation rep;
  rep.kind = kind;
  rep.left.resize(n);
  rep.right.resize(n);
  for (int rank = 0; rank < 2 * n; ++rank) {
    const int code = ends[rank].second;
    (code % 2 ? rep.right : rep.left)[code / 2] = rank + 1;
  }
  return rep;
}

RealRange random_range(Kind kind, int n, double density, Rng& rng) {
  // Mean length density / (2n) gives about `density` neighbors per vertex.
  const double mean = density / (2.0 * n);
  const double start = rng.unit();
  double len = std::min(2.0 * mean * rng.unit(), 0.95);
  len = std::max(len, 1e-12);
  if (kind == Kind::Circular) return {start, std::fmod(start + len, 1.0)};
  const double s = start * (1.0 - len);
  return {s, s + len};
}

void add_names(Representation& rep) {
  rep.names.resize(rep.n());
  for (Vertex v = 0; v < rep.n(); ++v) rep.names[v] = "v" + std::to_string(v + 1);
}

Representation permutation_model(Kind kind, int n, Rng& rng) {
  std::vector<int> perm(2 * n);
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(perm);
  Representation rep;
  rep.kind = kind;
  rep.left.resize(n);
  rep.right.resize(n);
  for (int v = 0; v < n; ++v) {
    int a = perm[2 * v];
    int b = perm[2 * v + 1];
    if (kind == Kind::Interval && a > b) std::swap(a, b);
    rep.left[v] = a;
    rep.right[v] = b;
  }
  return rep;
}

std::vector<TerminalPair> random_pairs(const GenParams& p, Rng& rng) {
  const long long possible = (long long)p.n * (p.n - 1) / 2;
  if (p.k > possible) {
    throw InfeasibleParams("k=" + std::to_string(p.k) + " exceeds the " +
                           std::to_string(possible) + " available pairs");
  }
  std::set<std::pair<int, int>> used;
  std::vector<TerminalPair> pairs;
  while (int(pairs.size()) < p.k) {
    const int s = rng.below(p.n);
    const int t = rng.below(p.n);
    if (s == t || !used.emplace(std::min(s, t), std::max(s, t)).second) continue;
    const int r = p.kind == Kind::Circular ? 1 : rng.between(1, p.max_requirement);
    pairs.push_back({s, t, r});
  }
  return pairs;
}

void check(const GenParams& p) {
  if (p.n < 1) throw InfeasibleParams("n must be positive");
  if (p.k < 0) throw InfeasibleParams("k must be non-negative");
  if (p.max_requirement < 1) throw InfeasibleParams("max requirement must be positive");
  if (p.density < 0) throw InfeasibleParams("density must be non-negative");
}

Generated planted(const GenParams& p, Rng& rng) {
  std::vector<int> req(p.k);
  int budget = p.n;
  for (int i = 0; i < p.k; ++i) {
    req[i] = p.kind == Kind::Circular ? 1 : rng.between(1, p.max_requirement);
    budget -= 2 + (req[i] - 1);
  }
  if (budget < 0) {
    throw InfeasibleParams("n=" + std::to_string(p.n) + " is too small for " +
                           std::to_string(p.k) + " planted corridors");
  }
  std::vector<RealRange> ranges;
  std::vector<TerminalPair> pairs;
  std::vector<std::vector<Vertex>> paths;  // per pair, as vertex lists
  std::vector<int> path_pair;
  const double width = 1.0 / std::max(p.k, 1);
  for (int i = 0; i < p.k; ++i) {
    const double a = i * width + 0.1 * width;
    const double len = 0.8 * width;
    const Vertex s = Vertex(ranges.size());
    if (req[i] >= 2) {
      // s and t overlap; tiny connectors sit side by side in the overlap.
      ranges.push_back({a, a + 0.6 * len});
      ranges.push_back({a + 0.4 * len, a + len});
      const Vertex t = s + 1;
      pairs.push_back({s, t, req[i]});
      paths.push_back({s, t});
      path_pair.push_back(i);
      const int extra = req[i] - 1;
      const double slot = 0.2 * len / extra;
      for (int c = 0; c < extra; ++c) {
        const double lo = a + 0.4 * len + c * slot;
        const Vertex w = Vertex(ranges.size());
        ranges.push_back({lo + 0.2 * slot, lo + 0.8 * slot});
        paths.push_back({s, w, t});
        path_pair.push_back(i);
      }
      continue;
    }
    // A chain s, c1, ..., cm, t where only consecutive members meet.
    const int inner = std::min(budget, rng.between(0, 3));
    budget -= inner;
    const int members = inner + 2;
    const double step = len / (members - 1 + 1.5);
    std::vector<Vertex> chain;
    for (int j = 0; j < members; ++j) {
      chain.push_back(Vertex(ranges.size()));
      ranges.push_back({a + j * step, a + j * step + 1.5 * step});
    }
    pairs.push_back({chain.front(), chain.back(), 1});
    paths.push_back(chain);
    path_pair.push_back(i);
  }
  while (int(ranges.size()) < p.n) {
    if (p.density > 0) {
      ranges.push_back(random_range(p.kind, p.n, p.density, rng));
    } else {
      const double x = rng.unit();
      const double y = rng.unit();
      if (p.kind == Kind::Interval) {
        ranges.push_back({std::min(x, y), std::max(x, y)});
      } else {
        ranges.push_back({x, y});
      }
    }
  }

  // Shuffle vertex ids so that planted structure is not visible in them.
  std::vector<Vertex> relabel(p.n);
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);
  std::vector<RealRange> shuffled(p.n);
  for (int v = 0; v < p.n; ++v) shuffled[relabel[v]] = ranges[v];

  Generated g;
  g.instance.rep = compress(p.kind, shuffled);
  add_names(g.instance.rep);
  for (auto& tp : pairs) {
    tp.s = relabel[tp.s];
    tp.t = relabel[tp.t];
  }
  g.instance.pairs = pairs;
  for (std::size_t j = 0; j < paths.size(); ++j) {
    PairPath pp{path_pair[j], {}};
    for (Vertex v : paths[j]) pp.vertices.push_back(relabel[v]);
    g.witness.paths.push_back(std::move(pp));
  }
  return g;
}

}  // namespace

Generated generate(const GenParams& p) {
  check(p);
  Rng rng(p.seed);
  if (p.planted) return planted(p, rng);
  Generated g;
  if (p.density > 0) {
    std::vector<RealRange> ranges(p.n);
    for (auto& r : ranges) r = random_range(p.kind, p.n, p.density, rng);
    g.instance.rep = compress(p.kind, ranges);
  } else {
    g.instance.rep = permutation_model(p.kind, p.n, rng);
  }
  add_names(g.instance.rep);
  g.instance.pairs = random_pairs(p, rng);
  return g;
}

Instance gen_random(const GenParams& p) { return generate(p).instance; }

}  // namespace idp

#include "idp/graph.hpp"

namespace idp {

EndpointIndex::EndpointIndex(const Representation& rep)
    : owner(rep.points() + 1, kNoVertex), is_left(rep.points() + 1, 0) {
  for (Vertex v = 0; v < rep.n(); ++v) {
    owner[rep.left[v]] = v;
    is_left[rep.left[v]] = 1;
    owner[rep.right[v]] = v;
  }
}

Adjacency build_adjacency(const Representation& rep, const EndpointIndex& ends) {
  const int n = rep.n();
  const int points = rep.points();
  Adjacency adj;
  adj.rank_.resize(n);
  adj.by_rank_.reserve(n);
  for (int p = 1; p <= points; ++p) {
    if (!ends.is_left[p]) continue;
    adj.rank_[ends.owner[p]] = Vertex(adj.by_rank_.size());
    adj.by_rank_.push_back(ends.owner[p]);
  }
  adj.offsets_.assign(n + 1, 0);
  adj.inside_.assign(n, 0);

  // Ranges open at each left endpoint bound the list sizes from above.
  std::int64_t bound = 0;
  {
    int open = 0;
    if (rep.kind == Kind::Circular) {
      for (Vertex v = 0; v < n; ++v) open += rep.wraps(v);
    }
    for (int p = 1; p <= points; ++p) {
      if (ends.is_left[p]) {
        bound += open++;
      } else {
        --open;
      }
    }
  }
  adj.covering_.resize(bound);
  Vertex* out = adj.covering_.data();

  std::vector<Vertex> open;
  std::vector<int> slot(n, -1);
  auto add = [&](Vertex v) {
    slot[v] = int(open.size());
    open.push_back(v);
  };
  if (rep.kind == Kind::Circular) {
    // Wrapping arcs all contain the seam between 2n and 1.
    for (Vertex v = 0; v < n; ++v) {
      if (rep.wraps(v)) add(v);
    }
  }
  int lefts = 0;
  for (int p = 1; p <= points; ++p) {
    const Vertex v = ends.owner[p];
    const int r = adj.rank_[v];
    if (!ends.is_left[p]) {
      const int at = slot[v];
      open[at] = open.back();
      slot[open[at]] = at;
      open.pop_back();
      adj.inside_[r] = rep.wraps(v) ? (n - r - 1) + lefts : lefts - r - 1;
      continue;
    }
    if (rep.kind == Kind::Circular) {
      // Skip arcs whose left endpoint lies inside v; they are listed there.
      const int reach = cw_offset(p, rep.right[v], points);
      for (Vertex w : open) {
        if (cw_offset(p, rep.left[w], points) >= reach) *out++ = w;
      }
    } else {
      for (Vertex w : open) *out++ = w;
    }
    adj.offsets_[r + 1] = out - adj.covering_.data();
    add(v);
    ++lefts;
  }
  adj.covering_.resize(out - adj.covering_.data());
  adj.edges_ = std::int64_t(adj.covering_.size());
  for (int r = 0; r < n; ++r) adj.edges_ += adj.inside_[r];
  adj.edges_ /= 2;
  return adj;
}

Adjacency build_adjacency(const Representation& rep) {
  return build_adjacency(rep, EndpointIndex(rep));
}

BucketIndex::BucketIndex(const Representation& rep,
                         const std::function<bool(Vertex)>& live) {
  const int points = rep.points();
  offsets_.assign(points + 2, 0);
  auto for_each_point = [&](Vertex v, auto&& fn) {
    const int l = rep.left[v];
    const int r = rep.right[v];
    if (l <= r) {
      for (int p = l; p <= r; ++p) fn(p);
    } else {
      for (int p = l; p <= points; ++p) fn(p);
      for (int p = 1; p <= r; ++p) fn(p);
    }
  };
  for (Vertex v = 0; v < rep.n(); ++v) {
    if (!live(v)) continue;
    for_each_point(v, [&](int p) { ++offsets_[p + 1]; });
  }
  for (int p = 1; p <= points; ++p) offsets_[p + 1] += offsets_[p];
  items_.resize(offsets_[points + 1]);
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end());
  for (Vertex v = 0; v < rep.n(); ++v) {
    if (!live(v)) continue;
    for_each_point(v, [&](int p) { items_[fill[p]++] = v; });
  }
}

}  // namespace idp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idp {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

enum class Kind { Interval, Circular };

std::string to_string(Kind kind);

// Interval or circular-arc model. Endpoints are 1..2n, pairwise distinct.
// For circular models an arc runs clockwise from left to right and wraps
// when right < left.
struct Representation {
  Kind kind = Kind::Interval;
  std::vector<int> left;
  std::vector<int> right;
  std::vector<std::string> names;  // optional display ids, empty = numeric

  int n() const { return static_cast<int>(left.size()); }
  int points() const { return 2 * n(); }
  std::string name(Vertex v) const;
  bool wraps(Vertex v) const { return left[v] > right[v]; }
};

// Point p lies on the clockwise arc [l, r] (closed). Exact for intervals too.
constexpr bool on_arc(int l, int r, int p) {
  return l <= r ? (l <= p && p <= r) : (p >= l || p <= r);
}

// Clockwise distance from a to b on a circle of `points` points.
constexpr int cw_offset(int a, int b, int points) {
  const int d = b - a;
  return d >= 0 ? d : d + points;
}

inline bool covers(const Representation& rep, Vertex v, int p) {
  return on_arc(rep.left[v], rep.right[v], p);
}

// O(1). Two arcs meet iff one of them contains the other's left endpoint.
inline bool adjacent(const Representation& rep, Vertex x, Vertex y) {
  if (x == y) return false;
  if (rep.kind == Kind::Interval) {
    return rep.left[x] < rep.right[y] && rep.left[y] < rep.right[x];
  }
  return covers(rep, x, rep.left[y]) || covers(rep, y, rep.left[x]);
}

// A closed clockwise range of ground points. `full` marks the whole circle;
// first/last are then meaningless.
struct Span {
  int first = 0;
  int last = 0;
  bool full = false;

  friend bool operator==(const Span&, const Span&) = default;
};

int span_length(const Span& s, int points);
bool span_contains_point(const Span& s, int p);
bool spans_intersect(const Span& a, const Span& b);
// Union of two intersecting spans on a circle of `points` points.
Span span_union(const Span& a, const Span& b, int points);
Span vertex_span(const Representation& rep, Vertex v);
std::string to_string(const Span& s);

}  // namespace idp

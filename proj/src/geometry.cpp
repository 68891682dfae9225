#include "idp/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace idp {

std::string to_string(Kind kind) {
  return kind == Kind::Interval ? "interval" : "circular";
}

std::string Representation::name(Vertex v) const {
  return names.empty() ? std::to_string(v) : names[v];
}

int span_length(const Span& s, int points) {
  if (s.full) return points;
  return cw_offset(s.first, s.last, points) + 1;
}

bool span_contains_point(const Span& s, int p) {
  return s.full || on_arc(s.first, s.last, p);
}

bool spans_intersect(const Span& a, const Span& b) {
  if (a.full || b.full) return true;
  return on_arc(a.first, a.last, b.first) || on_arc(b.first, b.last, a.first);
}

Span span_union(const Span& a, const Span& b, int points) {
  assert(spans_intersect(a, b));
  if (a.full || b.full) return Span{0, 0, true};
  auto grow = [points](const Span& base, const Span& other) {
    const int base_len = span_length(base, points);
    const int reach = cw_offset(base.first, other.first, points) +
                      span_length(other, points);
    const int len = std::max(base_len, reach);
    if (len >= points) return Span{0, 0, true};
    return Span{base.first, (base.first - 1 + len - 1) % points + 1, false};
  };
  if (on_arc(a.first, a.last, b.first)) return grow(a, b);
  return grow(b, a);
}

Span vertex_span(const Representation& rep, Vertex v) {
  return Span{rep.left[v], rep.right[v], false};
}

std::string to_string(const Span& s) {
  if (s.full) return "[full]";
  return "[" + std::to_string(s.first) + "," + std::to_string(s.last) + "]";
}

}  // namespace idp

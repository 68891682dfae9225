#pragma once

#include <string>
#include <variant>
#include <vector>

#include "idp/geometry.hpp"

namespace idp {

// A path for one terminal pair, listed from the s-representative to the
// t-representative.
struct PairPath {
  int pair = 0;  // 0-based pair index
  std::vector<Vertex> vertices;

  friend bool operator==(const PairPath&, const PairPath&) = default;
};

struct Solution {
  std::vector<PairPath> paths;
};

// Which step refuted the instance. `step` is "2", "6", "7", "10", "5+",
// "10*"; the optional fields name the offending object.
struct NoCertificate {
  std::string step;
  int pair = -1;    // 0-based
  int vertex = -1;
  std::string note;

  std::string detail() const;
};

using Outcome = std::variant<Solution, NoCertificate>;

inline bool is_yes(const Outcome& o) {
  return std::holds_alternative<Solution>(o);
}

}  // namespace idp

#pragma once

#include <cstdint>
#include <stdexcept>

#include "idp/instance.hpp"
#include "idp/solution.hpp"

namespace idp {

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenParams {
  Kind kind = Kind::Interval;
  int n = 10;
  // Expected average degree. Zero draws the endpoints as a uniform random
  // permutation of 1..2n instead, which gives dense graphs.
  double density = 0.0;
  int k = 1;
  int max_requirement = 1;  // circular instances always use 1
  bool planted = false;
  std::uint64_t seed = 1;
};

struct Generated {
  Instance instance;
  Solution witness;  // planted mode only
};

// Deterministic in the parameters. Throws InfeasibleParams.
Generated generate(const GenParams& params);
Instance gen_random(const GenParams& params);

}  // namespace idp

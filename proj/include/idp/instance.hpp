#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idp/geometry.hpp"

namespace idp {

struct TerminalPair {
  Vertex s = kNoVertex;
  Vertex t = kNoVertex;
  int requirement = 1;
};

struct Instance {
  Representation rep;
  std::vector<TerminalPair> pairs;

  int n() const { return rep.n(); }
  int k() const { return static_cast<int>(pairs.size()); }
  long long total_requirement() const;
};

enum class ValidationErrorKind {
  EmptyGraph,
  EndpointOutOfRange,
  DuplicateEndpoint,
  InvertedInterval,
  UnknownVertex,
  DegeneratePair,
  DuplicatePair,
  ZeroRequirement,
  RequirementOnCircular,
};

std::string to_string(ValidationErrorKind kind);

struct ValidationError {
  ValidationErrorKind kind;
  int vertex = -1;    // offending vertex, if any
  int pair = -1;      // offending pair index (0-based), if any
  int endpoint = -1;  // offending endpoint value, if any

  std::string message() const;
};

// First violated invariant, or nullopt when the instance is well formed.
std::optional<ValidationError> validate_instance(const Instance& inst);
std::optional<ValidationError> validate_representation(
    const Representation& rep);

}  // namespace idp

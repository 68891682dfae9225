#include "idp/instance.hpp"

#include <algorithm>
#include <unordered_set>

namespace idp {

long long Instance::total_requirement() const {
  long long sum = 0;
  for (const auto& p : pairs) sum += p.requirement;
  return sum;
}

std::string to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::EmptyGraph: return "EmptyGraph";
    case ValidationErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ValidationErrorKind::DuplicateEndpoint: return "DuplicateEndpoint";
    case ValidationErrorKind::InvertedInterval: return "InvertedInterval";
    case ValidationErrorKind::UnknownVertex: return "UnknownVertex";
    case ValidationErrorKind::DegeneratePair: return "DegeneratePair";
    case ValidationErrorKind::DuplicatePair: return "DuplicatePair";
    case ValidationErrorKind::ZeroRequirement: return "ZeroRequirement";
    case ValidationErrorKind::RequirementOnCircular:
      return "RequirementOnCircular";
  }
  return "?";
}

std::string ValidationError::message() const {
  std::string out = to_string(kind);
  if (endpoint >= 0) out += "(" + std::to_string(endpoint) + ")";
  if (vertex >= 0) out += " vertex=" + std::to_string(vertex);
  if (pair >= 0) out += " pair=" + std::to_string(pair + 1);
  return out;
}

std::optional<ValidationError> validate_representation(
    const Representation& rep) {
  const int n = rep.n();
  if (n == 0) return ValidationError{ValidationErrorKind::EmptyGraph};
  const int points = 2 * n;
  std::vector<int> owner(points + 1, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int p : {rep.left[v], rep.right[v]}) {
      if (p < 1 || p > points) {
        return ValidationError{ValidationErrorKind::EndpointOutOfRange, v, -1,
                               p};
      }
      if (owner[p] != -1) {
        return ValidationError{ValidationErrorKind::DuplicateEndpoint, v, -1,
                               p};
      }
      owner[p] = v;
    }
    if (rep.kind == Kind::Interval && rep.left[v] > rep.right[v]) {
      return ValidationError{ValidationErrorKind::InvertedInterval, v};
    }
  }
  return std::nullopt;
}

std::optional<ValidationError> validate_instance(const Instance& inst) {
  if (auto err = validate_representation(inst.rep)) return err;
  const int n = inst.n();
  std::unordered_set<long long> seen;
  for (int i = 0; i < inst.k(); ++i) {
    const auto& p = inst.pairs[i];
    if (p.s < 0 || p.s >= n) {
      return ValidationError{ValidationErrorKind::UnknownVertex, p.s, i};
    }
    if (p.t < 0 || p.t >= n) {
      return ValidationError{ValidationErrorKind::UnknownVertex, p.t, i};
    }
    if (p.s == p.t) {
      return ValidationError{ValidationErrorKind::DegeneratePair, p.s, i};
    }
    if (p.requirement < 1) {
      return ValidationError{ValidationErrorKind::ZeroRequirement, -1, i};
    }
    if (inst.rep.kind == Kind::Circular && p.requirement > 1) {
      return ValidationError{ValidationErrorKind::RequirementOnCircular, -1, i};
    }
    const long long key = static_cast<long long>(std::min(p.s, p.t)) * n +
                          std::max(p.s, p.t);
    if (!seen.insert(key).second) {
      return ValidationError{ValidationErrorKind::DuplicatePair, -1, i};
    }
  }
  return std::nullopt;
}

}  // namespace idp

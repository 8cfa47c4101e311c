#include "stardisc/core.hpp"

#include <string>

namespace stardisc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::empty_point_set: return "empty-point-set";
    case ErrorKind::invalid_point_set: return "invalid-point-set";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::dimension_too_small: return "dimension-too-small";
    case ErrorKind::unsound_beta: return "unsound-beta";
    case ErrorKind::nonpositive_epsilon: return "nonpositive-epsilon";
    case ErrorKind::invalid_corner: return "invalid-corner";
    case ErrorKind::soundness_violation: return "internal-soundness-violation";
    case ErrorKind::invalid_spec: return "invalid-spec";
  }
  return "unknown";
}

PointSet::PointSet(Index dim) : dim_(dim), points_(0, dim) {
  if (dim < 1)
    throw Error(ErrorKind::invalid_point_set, "dimension must be positive");
}

PointSet::PointSet(PointMatrix points)
    : dim_(points.cols()), points_(std::move(points)) {
  if (dim_ < 1)
    throw Error(ErrorKind::invalid_point_set, "dimension must be positive");
  for (Index i = 0; i < points_.rows(); ++i) {
    if (!is_unit_corner(points_.row(i).transpose()))
      throw Error(ErrorKind::invalid_point_set,
                  "point " + std::to_string(i) + " has a coordinate outside [0,1]");
  }
}

namespace detail {

void throw_dimension_mismatch(Index expected, Index actual) {
  throw Error(ErrorKind::dimension_mismatch,
              "corner has dimension " + std::to_string(actual) +
                  ", point set has dimension " + std::to_string(expected));
}

void throw_empty(const char* op) {
  throw Error(ErrorKind::empty_point_set,
              std::string(op) + " requires a nonempty point set");
}

}  // namespace detail
}  // namespace stardisc

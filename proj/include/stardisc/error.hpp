#pragma once

#include <stdexcept>
#include <string>

namespace stardisc {

enum class ErrorKind {
  dimension_mismatch,
  empty_point_set,
  invalid_point_set,
  parse_error,
  resource_limit,
  invalid_argument,
  dimension_too_small,
  unsound_beta,
  nonpositive_epsilon,
  invalid_corner,
  soundness_violation,
  invalid_spec,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stardisc

#pragma once

#include <stdexcept>
#include <string>

namespace gencal {

/// Error kinds surfaced to the CLI exit-code contract.
enum class ErrorKind {
  dimension_mismatch,
  invalid_argument,
  not_spd,
  not_skew,
  frame_mismatch,
  not_pure,
  degree_leak,
  parity_mismatch,
  convergence,
  rank_inconclusive,
  schema,
  unsupported,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace gencal

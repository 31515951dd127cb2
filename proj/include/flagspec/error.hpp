#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagspec {

enum class ErrorKind {
  invalid_argument,  // malformed input, inadmissible type, bad index, ...
  not_spinc,
  not_kahler,
  unit_mismatch,
  singular_input,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_spinc: return "not-spinc";
    case ErrorKind::not_kahler: return "not-kahler";
    case ErrorKind::unit_mismatch: return "unit-mismatch";
    case ErrorKind::singular_input: return "singular-input";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so front ends can
/// map it onto exit codes and structured error documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of a mathematical precondition (as opposed to
  /// malformed input).
  bool is_precondition() const noexcept {
    return kind_ != ErrorKind::invalid_argument;
  }

 private:
  ErrorKind kind_;
};

}  // namespace flagspec

#pragma once

#include <stdexcept>
#include <string>

namespace arrfree {

/// Failure categories. The CLI maps each one to a distinct exit status.
enum class ErrorKind {
  Parse,
  FieldMismatch,
  DivisionByZero,
  InvalidArgument,
  SelfCheck,
  NotDrawable,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace arrfree

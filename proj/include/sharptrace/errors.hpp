#pragma once

#include <stdexcept>
#include <string>

namespace sharptrace {

enum class ErrorKind {
  Usage,              // caller violated an operation's contract
  Domain,             // argument outside the mathematical domain (poles, ranges)
  UnsupportedRegime,  // valid input, but a regime this library does not evaluate
  Convergence,        // series or iteration failed to converge
  Structural,         // malformed algebraic object
  Accuracy,           // result would not meet the configured accuracy
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sharptrace

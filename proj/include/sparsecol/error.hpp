#pragma once

#include <stdexcept>
#include <string>

namespace sparsecol {

enum class Errc {
  OutOfRange,
  SelfLoop,
  InvalidColouring,
  EmptyGraph,
  SizeLimitExceeded,
  PreconditionViolated,
  DensityViolation,
  NotFound,
  InvalidSpec,
  Parse,
  Internal,
};

const char* to_string(Errc code) noexcept;

/// Base exception for every failure raised by the library. The code is stable
/// and is what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A vertex-local inequality required by an algorithm does not hold.
class PreconditionViolated : public Error {
 public:
  PreconditionViolated(int vertex, const std::string& what)
      : Error(Errc::PreconditionViolated, what), vertex_(vertex) {}

  /// Offending vertex, or -1 when the violation is not tied to one vertex.
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(Errc::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

[[noreturn]] void internal_error(const std::string& what);

}  // namespace sparsecol

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace contactfill {

/// Named failure modes of the library. The CLI prints the name verbatim.
enum class ErrorKind {
  ParseError,
  DegenerateArc,
  InfiniteFamily,
  UndefinedSlope,
  InvalidTorus,
  InvalidCoefficient,
  InvalidParameter,
};

std::string_view to_string(ErrorKind kind) noexcept;

class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace contactfill

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hqp {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ReducibleModulus,
  InvalidField,
  DimensionMismatch,
  RingMismatch,
  ZeroPolynomial,
  Overflow,
  SyntaxError,
  UnknownVariable,
  CoefficientNotInField,
  WeightCountMismatch,
  NonPositiveWeight,
  InvalidProblem,
  ResourceExhausted,
  InfiniteStaircase,
  UnitIdeal,
  NonIntegerIntermediate,
  NegativeValue,
  SingularSystem,
  RankDeficient,
  BoundExceeded,
  NotOrderDomain,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

struct SourceLocation {
  int line = 0;
  int column = 0;
};

/// Every failure raised by the library. The kind is the machine-readable part;
/// the CLI maps it to an exit code and a JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourceLocation> location = std::nullopt)
      : std::runtime_error(message), kind_(kind), location_(location) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceLocation>& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::optional<SourceLocation> location_;
};

}  // namespace hqp

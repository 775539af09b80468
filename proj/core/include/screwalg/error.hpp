#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace screwalg {

enum class ErrorKind {
  NonFinite,
  NotInvertible,
  DomainError,
  OutOfRange,
  BoundaryDualPart,
  NullVector,
  DegenerateBasis,
  NotAntisymmetric,
  NotAFrame,
  ProjectionMismatch,
  NotPureDual,
  NotUnit,
  NonZeroPitch,
  ParallelResultants,
  NotEquiprojective,
  DegenerateSamples,
  OracleInconsistent,
  DegenerateTriangle,
  NonGeneric,
  NotOnSphere,
  NotAntipodal,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail);

}  // namespace screwalg

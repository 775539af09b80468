#include "screwalg/error.hpp"

namespace screwalg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BoundaryDualPart: return "BoundaryDualPart";
    case ErrorKind::NullVector: return "NullVector";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::ProjectionMismatch: return "ProjectionMismatch";
    case ErrorKind::NotPureDual: return "NotPureDual";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NonZeroPitch: return "NonZeroPitch";
    case ErrorKind::ParallelResultants: return "ParallelResultants";
    case ErrorKind::NotEquiprojective: return "NotEquiprojective";
    case ErrorKind::DegenerateSamples: return "DegenerateSamples";
    case ErrorKind::OracleInconsistent: return "OracleInconsistent";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::NotAntipodal: return "NotAntipodal";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace screwalg

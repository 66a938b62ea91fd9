#include "ordsum/errors.hpp"

namespace ordsum {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBoundsError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ClosureError: return "ClosureError";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::OverlapError: return "OverlapError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

NotALatticeError::NotALatticeError(std::string x, std::string y, std::string reason)
    : Error(ErrorKind::NotALattice, "(" + x + ", " + y + ") " + reason),
      x_(std::move(x)),
      y_(std::move(y)),
      reason_(std::move(reason)) {}

ClosureError::ClosureError(std::size_t row, std::size_t col, const std::string& detail)
    : Error(ErrorKind::ClosureError, detail), row_(row), col_(col) {}

ChainViolationError::ChainViolationError(std::size_t index,
                                         std::optional<ConflictWitness> witness,
                                         const std::string& detail)
    : Error(ErrorKind::ChainViolation, detail), index_(index), witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, const std::string& detail)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + detail), line_(line) {}

}  // namespace ordsum

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordsum {

enum class ErrorKind {
  CycleDetected,
  NotALattice,
  NoBounds,
  DuplicateLabel,
  UnknownLabel,
  ForeignElement,
  NotComparable,
  SizeLimit,
  ClosureError,
  CarrierMismatch,
  NotAChain,
  ChainViolation,
  OverlapError,
  ValidationError,
  GridMismatch,
  GridTooCoarse,
  GenerationExhausted,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind is stable and is what
/// the CLI maps to exit codes; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class NotALatticeError : public Error {
public:
  NotALatticeError(std::string x, std::string y, std::string reason);
  const std::string& x() const noexcept { return x_; }
  const std::string& y() const noexcept { return y_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::string x_, y_, reason_;
};

class ClosureError : public Error {
public:
  ClosureError(std::size_t row, std::size_t col, const std::string& detail);
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

private:
  std::size_t row_, col_;
};

/// A pair that falls into two branch regions of the finite ordinal-sum formula
/// whose candidate values disagree. Labels, not ids, so the witness survives
/// the lattice going out of scope.
struct ConflictWitness {
  std::string x, y;
  std::vector<std::string> values;  // distinct, canonical element order
};

class ChainViolationError : public Error {
public:
  ChainViolationError(std::size_t index, std::optional<ConflictWitness> witness,
                      const std::string& detail);
  /// 1-based summand index i with b_i not below a_{i+1}.
  std::size_t index() const noexcept { return index_; }
  const std::optional<ConflictWitness>& witness() const noexcept { return witness_; }

private:
  std::size_t index_;
  std::optional<ConflictWitness> witness_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace ordsum

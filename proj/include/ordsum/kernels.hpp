#pragma once

// Index-level kernels behind check_tnorm. Everything here works on carrier
// positions (0..n-1), not lattice elements. The serial versions are the
// reference; the OpenMP versions must return identical witnesses.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace ordsum::kernels {

struct AxiomProblem {
  std::size_t n = 0;
  std::span<const std::uint32_t> table;  // n*n, row-major
  std::span<const std::uint8_t> leq;     // n*n carrier order
  std::uint32_t top = 0;
};

struct AxiomWitnesses {
  std::optional<std::array<std::uint32_t, 2>> commutativity;
  std::optional<std::array<std::uint32_t, 3>> increasing;
  std::optional<std::array<std::uint32_t, 3>> associativity;
  std::optional<std::uint32_t> neutrality;
};

struct ClosureViolation {
  std::size_t row, col;
};

/// First out-of-range entry in row-major order, if any.
std::optional<ClosureViolation> find_closure_violation(const AxiomProblem& p);

namespace serial {
AxiomWitnesses check_axioms(const AxiomProblem& p);
std::optional<std::array<std::uint32_t, 3>> first_nonassociative(const AxiomProblem& p);
}  // namespace serial

namespace parallel {
AxiomWitnesses check_axioms(const AxiomProblem& p);
std::optional<std::array<std::uint32_t, 3>> first_nonassociative(const AxiomProblem& p);
}  // namespace parallel

}  // namespace ordsum::kernels

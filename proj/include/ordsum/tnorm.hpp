#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordsum/lattice.hpp"

namespace ordsum {

/// Selects the serial reference kernels or the OpenMP ones. Both produce
/// identical results.
enum class Exec { Serial, Parallel };

/// Total binary operation on an interval, stored as a |carrier|^2 table in
/// carrier order. Closed by construction.
class OpTable {
public:
  /// Throws ClosureError if an entry lies outside the carrier.
  OpTable(Interval carrier, std::vector<ElementId> entries, std::string name);

  const Interval& carrier() const noexcept { return carrier_; }
  const FiniteLattice& lattice() const noexcept { return carrier_.lattice(); }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::string& name() const noexcept { return name_; }
  std::span<const ElementId> entries() const noexcept { return entries_; }

  /// T(x, y); ForeignElement if either argument is outside the carrier.
  ElementId operator()(ElementId x, ElementId y) const;
  ElementId at_position(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

  OpTable renamed(std::string name) const;

  /// Same carrier and entries; names are ignored.
  friend bool operator==(const OpTable& a, const OpTable& b) noexcept {
    return a.carrier_ == b.carrier_ && a.entries_ == b.entries_;
  }

private:
  Interval carrier_;
  std::vector<ElementId> entries_;
  std::string name_;
};

/// Result of checking the four t-norm axioms. Every failing axiom carries a
/// witness that is lexicographically minimal in carrier order.
struct AxiomReport {
  bool commutative = true;
  std::optional<std::array<ElementId, 2>> commutativity_witness;  // T(x,y) != T(y,x)
  bool increasing = true;
  std::optional<std::array<ElementId, 3>> increasing_witness;  // x <= y, T(x,z) !<= T(y,z)
  bool associative = true;
  std::optional<std::array<ElementId, 3>> associativity_witness;  // T(T(x,y),z) != T(x,T(y,z))
  bool neutral = true;
  std::optional<ElementId> neutrality_witness;  // T(top,x) != x

  bool is_tnorm() const noexcept { return commutative && increasing && associative && neutral; }
};

AxiomReport check_tnorm(const OpTable& op, Exec exec = Exec::Parallel);

/// True iff every witness in `report` really falsifies its axiom on `op`.
bool witnesses_falsify(const OpTable& op, const AxiomReport& report);

/// Multi-line human-readable report, evaluating each witness.
std::string describe(const OpTable& op, const AxiomReport& report);

OpTable t_min(const Interval& carrier);
OpTable t_drastic(const Interval& carrier);
/// x ∧ y if the carrier top is an argument, x ∧ y ∧ c otherwise.
OpTable t_c(const Interval& carrier, ElementId c);

/// Componentwise operation on a product interval P = I1 × I2.
OpTable t_product(const OpTable& first, const OpTable& second, const Interval& product_interval);

inline constexpr std::size_t kEnumerationCap = 5;

/// Every t-norm on `carrier`, in a deterministic order. Exponential; refuses
/// carriers larger than `cap` with SizeLimit.
std::vector<OpTable> enumerate_tnorms(const Interval& carrier, std::size_t cap = kEnumerationCap);

/// Entrywise T1 <= T2 in the lattice order (same carrier required).
bool pointwise_leq(const OpTable& lhs, const OpTable& rhs);

}  // namespace ordsum

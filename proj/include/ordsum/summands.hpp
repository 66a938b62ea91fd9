#pragma once

#include <cstddef>
#include <vector>

#include "ordsum/lattice.hpp"
#include "ordsum/tnorm.hpp"

namespace ordsum {

struct Summand {
  Interval interval;
  OpTable tnorm;
};

/// Ordered summands <a_i, b_i, T_i>. Construction checks that every table
/// lives on its interval and, when `validate` is set, that it is a t-norm.
class SummandList {
public:
  SummandList(FiniteLattice lattice, std::vector<Summand> summands, bool validate = true);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Summand>& summands() const noexcept { return summands_; }
  std::size_t size() const noexcept { return summands_.size(); }
  const Summand& operator[](std::size_t i) const { return summands_[i]; }

  /// b_i <= a_{i+1} for every consecutive pair.
  bool chain_endpoint_flag() const noexcept { return chain_ok_; }
  /// First 1-based i with b_i not below a_{i+1}, or 0.
  std::size_t first_chain_violation() const noexcept { return violation_; }

private:
  FiniteLattice lattice_;
  std::vector<Summand> summands_;
  bool chain_ok_ = true;
  std::size_t violation_ = 0;
};

/// Convenience: summand with the interval taken from the table's carrier.
inline Summand make_summand(const OpTable& tnorm) { return Summand{tnorm.carrier(), tnorm}; }

}  // namespace ordsum

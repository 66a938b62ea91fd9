#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordsum/lattice.hpp"
#include "ordsum/summands.hpp"
#include "ordsum/tnorm.hpp"

namespace ordsum {

/// Nondecreasing chain c_0 <= c_1 <= ... <= c_n. Indices outside 0..n are
/// padded with the end points, so the chain meet is always c_0.
class ChainSpec {
public:
  /// Throws NotAChain(i) when c_{i-1} is not below c_i.
  ChainSpec(FiniteLattice lattice, std::vector<ElementId> points);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const std::vector<ElementId>& points() const noexcept { return points_; }
  /// Number of intervals [c_{i-1}, c_i], i = 1..n.
  std::size_t interval_count() const noexcept { return points_.size() - 1; }
  /// c_i with end-point padding for any integer index.
  ElementId point(long long i) const;
  ElementId chain_meet() const noexcept { return points_.front(); }
  Interval segment(std::size_t i) const { return Interval(lattice_, point(static_cast<long long>(i) - 1), point(static_cast<long long>(i))); }

private:
  FiniteLattice lattice_;
  std::vector<ElementId> points_;
};

/// Subset of a lattice's carrier with O(1) membership.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, 0) {}

  void insert(ElementId x) { mask_[x.index] = 1; }
  bool contains(ElementId x) const noexcept { return x.index < mask_.size() && mask_[x.index]; }
  std::vector<ElementId> members() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

private:
  std::vector<std::uint8_t> mask_;
};

/// The partition of a lattice relative to a chain: S1 holds elements
/// incomparable with some chain point, split into A1 (incomparable from the
/// constant left tail on) and A2[i]; S2 holds the rest.
struct Decomposition {
  ChainSpec chain;
  ElementSet s1, s2, a1;
  std::vector<ElementSet> a2;  // a2[i-1] is A2^i, i = 1..n
  ElementSet b1, b2, b3;
  ElementId chain_meet;

  /// i such that x is in A2^i, or 0.
  std::size_t a2_index(ElementId x) const;
};

Decomposition decompose(const ChainSpec& chain);
inline Decomposition decompose(const FiniteLattice& lattice, const std::vector<ElementId>& points) {
  return decompose(ChainSpec(lattice, points));
}

/// Branch of the contiguous ordinal-sum formula selected by a pair.
struct RegionTag {
  enum class Kind { Square, Delta2, Delta1, Fallback };
  Kind kind = Kind::Fallback;
  std::size_t index = 0;  // 1-based for Square and Delta2, 0 otherwise

  static RegionTag square(std::size_t i) { return {Kind::Square, i}; }
  static RegionTag delta2(std::size_t i) { return {Kind::Delta2, i}; }
  static RegionTag delta1() { return {Kind::Delta1, 0}; }
  static RegionTag fallback() { return {Kind::Fallback, 0}; }

  friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

std::string to_string(const RegionTag& tag);

/// First matching region in the order Square(1..n), Delta2(1..n), Delta1,
/// Fallback.
RegionTag classify_pair(const Decomposition& dec, ElementId x, ElementId y);

/// Every region containing (x, y), in the same order; Fallback only when
/// nothing else matches. Used to audit the disjointness of the regions.
std::vector<RegionTag> regions_containing(const Decomposition& dec, ElementId x, ElementId y);

/// Doubled chain a_1, b_1, ..., a_n, b_n with the t-norms T_1, min, T_2, ...,
/// min, T_n on the consecutive segments. Throws ChainViolation(i) when b_i is
/// not below a_{i+1}.
std::pair<ChainSpec, std::vector<OpTable>> interleave_chain(const SummandList& summands);

}  // namespace ordsum

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordsum {

/// Position of an element in its lattice's canonical (declaration) order.
struct ElementId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

using LabelPair = std::pair<std::string, std::string>;
using Cover = std::pair<ElementId, ElementId>;

class FiniteLattice;

namespace detail {
struct LatticeData;
}

/// Set by `product`: element (u, v) has index u * |right| + v.
struct ProductFactors;

/// Immutable finite bounded lattice. Copies share the same tables.
class FiniteLattice {
public:
  FiniteLattice() = default;

  std::size_t size() const noexcept;
  std::vector<ElementId> elements() const;

  const std::string& label(ElementId x) const;
  std::span<const std::string> labels() const noexcept;
  std::optional<ElementId> find(std::string_view label) const;
  /// Throws ForeignElement for an unknown label.
  ElementId at(std::string_view label) const;
  bool contains(ElementId x) const noexcept { return x.index < size(); }

  bool leq(ElementId x, ElementId y) const;
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }
  ElementId meet(ElementId x, ElementId y) const;
  ElementId join(ElementId x, ElementId y) const;
  ElementId bottom() const noexcept;
  ElementId top() const noexcept;

  /// I_a: elements neither below nor above `a`.
  std::vector<ElementId> incomparables(ElementId a) const;

  /// Transitive reduction, sorted lexicographically by (lower, upper).
  const std::vector<Cover>& covers() const noexcept;
  /// Length of the longest chain from bottom to each element.
  const std::vector<std::size_t>& ranks() const noexcept;
  std::size_t height() const noexcept;

  const ProductFactors* factors() const noexcept;

  /// Identity: both handles refer to the same built lattice.
  bool same_as(const FiniteLattice& other) const noexcept { return data_ == other.data_; }
  bool valid() const noexcept { return data_ != nullptr; }

  /// Raw row-major order matrix, for kernels.
  std::span<const std::uint8_t> order_matrix() const noexcept;

private:
  friend FiniteLattice make_lattice(std::shared_ptr<const detail::LatticeData>);
  void check(ElementId x) const;

  std::shared_ptr<const detail::LatticeData> data_;
};

struct ProductFactors {
  FiniteLattice left, right;
  ElementId pair(ElementId u, ElementId v) const {
    return ElementId{static_cast<std::uint32_t>(u.index * right.size() + v.index)};
  }
  ElementId first(ElementId x) const {
    return ElementId{static_cast<std::uint32_t>(x.index / right.size())};
  }
  ElementId second(ElementId x) const {
    return ElementId{static_cast<std::uint32_t>(x.index % right.size())};
  }
};

/// Builds a lattice whose order is the reflexive-transitive closure of
/// `covers`. Redundant pairs are accepted; `covers()` of the result is the
/// transitive reduction.
FiniteLattice build_lattice(const std::vector<std::string>& labels,
                            const std::vector<LabelPair>& covers);

/// Same, from an explicit order relation (row-major, `leq[i*n+j]` means
/// i <= j). The relation is closed transitively before validation.
FiniteLattice build_lattice_from_order(const std::vector<std::string>& labels,
                                       const std::vector<std::uint8_t>& leq);

/// Sub-poset induced on `keep` (canonical order preserved). Throws the usual
/// validation errors when it is not a bounded lattice.
FiniteLattice induced_sublattice(const FiniteLattice& lattice, std::span<const ElementId> keep);

inline constexpr std::size_t kDefaultProductCap = 4096;

/// Componentwise product; labels are "(u,v)".
FiniteLattice product(const FiniteLattice& left, const FiniteLattice& right,
                      std::size_t size_cap = kDefaultProductCap);

/// Chain 0 < 1/n < ... < 1 with labels printed to four decimals.
FiniteLattice grid_chain(std::size_t grid_size);
std::string grid_label(std::size_t k, std::size_t grid_size);

/// Closed interval [lo, hi]; itself a bounded lattice.
class Interval {
public:
  Interval(FiniteLattice lattice, ElementId lo, ElementId hi);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  ElementId lo() const noexcept { return lo_; }
  ElementId hi() const noexcept { return hi_; }
  std::span<const ElementId> carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  bool contains(ElementId x) const noexcept {
    return x.index < position_.size() && position_[x.index] >= 0;
  }
  /// Position within `carrier()`; throws ForeignElement.
  std::size_t position(ElementId x) const;
  std::optional<std::size_t> find_position(ElementId x) const noexcept;

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.lattice_.same_as(b.lattice_) && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

private:
  FiniteLattice lattice_;
  ElementId lo_, hi_;
  std::vector<ElementId> carrier_;
  std::vector<std::int32_t> position_;
};

Interval interval(const FiniteLattice& lattice, ElementId lo, ElementId hi);
inline Interval whole(const FiniteLattice& lattice) {
  return Interval(lattice, lattice.bottom(), lattice.top());
}

// Half-open views. Bounds are inclusive unless named open.
inline bool in_closed(const FiniteLattice& l, ElementId x, ElementId lo, ElementId hi) {
  return l.leq(lo, x) && l.leq(x, hi);
}
inline bool in_right_open(const FiniteLattice& l, ElementId x, ElementId lo, ElementId hi) {
  return l.leq(lo, x) && l.lt(x, hi);
}
inline bool in_open(const FiniteLattice& l, ElementId x, ElementId lo, ElementId hi) {
  return l.lt(lo, x) && l.lt(x, hi);
}

}  // namespace ordsum

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordsum/decomposition.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/lattice.hpp"
#include "ordsum/summands.hpp"
#include "ordsum/tnorm.hpp"

namespace ordsum {

struct OsOptions {
  Exec exec = Exec::Parallel;
  /// os_general: also evaluate the finite closed form and require entrywise
  /// agreement with the interleaved route (std::logic_error otherwise).
  bool cross_check = true;
  /// os_contiguous: verify that the Delta regions are pairwise disjoint and
  /// disjoint from the squares for every pair (std::logic_error otherwise).
  bool audit_regions = true;
};

/// Naive extension: T_i on [a_i, b_i]^2, meet elsewhere. Not a t-norm in
/// general. Throws OverlapError when two open intervals ]a_i, b_i[ meet.
OpTable os_saminger(const SummandList& summands, const OsOptions& opts = {});

/// Contiguous sum over the chain's segments; tnorms[i-1] lives on
/// [c_{i-1}, c_i].
OpTable os_contiguous(const ChainSpec& chain, std::span<const OpTable> tnorms, const OsOptions& opts = {});

/// Ordinal sum of summands whose end points form a chain. Throws
/// ChainViolationError otherwise, carrying a conflicting pair when one exists.
OpTable os_general(const SummandList& summands, const OsOptions& opts = {});

/// The independent evaluation routes behind os_general.
enum class OsRoute {
  Interleaved,  // doubled chain fed to os_contiguous
  Finite,       // closed form with the I_{a_1} branch standing in for the first Lambda_2
  Padded,       // general form on a window of the Z-indexed padded family
};
OpTable os_general_route(const SummandList& summands, OsRoute route, const OsOptions& opts = {});

/// One summand <a, b, T1>.
OpTable os_one(const FiniteLattice& lattice, ElementId a, ElementId b, const OpTable& t1,
               const OsOptions& opts = {});

/// One summand <a, 1, T1>, three-branch form.
OpTable os_ertugrul(const FiniteLattice& lattice, ElementId a, const OpTable& t1, const OsOptions& opts = {});

/// First pair (in canonical order) lying in two Lambda_3 regions of the finite
/// closed form with different candidate values T_i(x ∧ b_i, y ∧ b_i). Only
/// possible when the chain condition fails.
std::optional<ConflictWitness> find_chain_conflict(const SummandList& summands);

/// A summand on the grid {0, 1/n, ..., 1}, all in grid units: the table is
/// (hi-lo+1)^2 absolute grid indices, row-major from lo.
struct GridSummand {
  std::size_t lo = 0, hi = 0;
  std::vector<std::size_t> table;
};

GridSummand grid_min(std::size_t lo, std::size_t hi);
/// max(x + y - hi, lo): the rescaled Lukasiewicz t-norm on the grid.
GridSummand grid_lukasiewicz(std::size_t lo, std::size_t hi);

/// Classical unit-interval ordinal sum restricted to the grid: T_i inside its
/// square, min elsewhere. Computed on grid indices only.
OpTable classical_os_unit_interval(std::size_t grid_size, std::span<const GridSummand> summands);
/// Same on a caller-supplied grid chain (from grid_chain(grid_size)).
OpTable classical_os_unit_interval(const FiniteLattice& grid, std::span<const GridSummand> summands);

/// The same summands as lattice objects on `grid`.
SummandList grid_summand_list(const FiniteLattice& grid, std::span<const GridSummand> summands,
                              bool validate = true);

}  // namespace ordsum

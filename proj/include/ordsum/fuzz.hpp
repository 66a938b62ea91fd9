#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordsum/decomposition.hpp"
#include "ordsum/generators.hpp"
#include "ordsum/ordinal_sum.hpp"
#include "ordsum/summands.hpp"

namespace ordsum {

/// Identities T(x, y) = T(x ∧ c_0, y) on A1 and T(x, y) = T(x ∧ c_i, y) on
/// A2^i (y below the top), and: T restricted to S2 is closed, is the meet
/// off the squares and is a t-norm on the sublattice S2. Returns the first
/// violation.
std::optional<std::string> check_projection_identities(const ChainSpec& chain, const OpTable& t);

/// Everything the construction promises for one summand list: the three
/// evaluation routes agree, the result passes the naive oracle (and
/// check_tnorm agrees flag by flag), the contiguous sum over the interleaved
/// chain gives the same table and satisfies the identities, one-summand
/// lists agree with os_one (and os_ertugrul when b = 1), chains agree with
/// os_saminger. Returns the first violation.
std::optional<std::string> check_construction(const SummandList& summands, Exec exec = Exec::Parallel);

/// On the (n+1)-point grid: os_general, os_saminger and the classical sum
/// coincide. Returns the first violation.
std::optional<std::string> check_grid_reduction(std::size_t grid_size, std::span<const GridSummand> summands);

struct FuzzConfig {
  GenConfig gen;
  Exec exec = Exec::Parallel;
  std::size_t max_grid = 20;
  bool minimize = true;
};

struct FuzzFailure {
  std::size_t sample = 0;
  std::string detail;
  SummandList reproducer;  // minimized when FuzzConfig::minimize is set
};

struct FuzzStats {
  std::size_t samples = 0;
  std::size_t construction_cases = 0;  // summand lists run through check_construction
  std::size_t grid_cases = 0;
  std::size_t with_s1 = 0;        // samples whose interleaved chain leaves S1 non-empty
  std::size_t saminger_failures = 0;  // of those, how many os_saminger outputs are not t-norms
  std::size_t lattice_attempts = 0;
  std::size_t lattice_accepted = 0;
};

struct FuzzReport {
  FuzzStats stats;
  std::vector<FuzzFailure> failures;
  /// First os_saminger output that is not a t-norm, minimized.
  std::optional<SummandList> saminger_example;
};

/// Per sample: a random lattice with random summands, a one-summand list
/// <a, 1, T>, and a contiguous list over a random chain all go through
/// check_construction; a random grid case goes through check_grid_reduction;
/// os_saminger is tallied on the first list.
FuzzReport run_fuzz(const FuzzConfig& cfg);

}  // namespace ordsum

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "ordsum/decomposition.hpp"
#include "ordsum/lattice.hpp"
#include "ordsum/summands.hpp"
#include "ordsum/tnorm.hpp"

namespace ordsum {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_elements = 9;
  std::size_t max_summands = 3;
  std::size_t sample_count = 500;
  /// Attempts per random_lattice / random_summands call.
  std::size_t retry_cap = 10000;
};

struct GenStats {
  std::size_t lattice_attempts = 0;
  std::size_t lattice_accepted = 0;
  double acceptance_rate() const {
    return lattice_attempts ? static_cast<double>(lattice_accepted) / static_cast<double>(lattice_attempts) : 0.0;
  }
};

/// Seeded source of test inputs. The whole sequence of outputs is a function
/// of the GenConfig and the order of calls.
class Generator {
public:
  explicit Generator(GenConfig cfg);

  const GenConfig& config() const noexcept { return cfg_; }
  const GenStats& stats() const noexcept { return stats_; }

  /// Size drawn uniformly from [2, max_elements].
  FiniteLattice random_lattice();
  /// Random DAG on n-2 middle elements (labels a, b, ...), closed, with 0
  /// and 1 adjoined; rejected until it is a lattice. Not uniform over
  /// lattices. Throws GenerationExhausted after retry_cap rejections.
  FiniteLattice random_lattice(std::size_t n);

  /// 1..max_summands summands on a random chain a_1 <= b_1 <= a_2 <= ...,
  /// each T_i uniform over enumerate_tnorms([a_i, b_i]) or, above the
  /// enumeration cap, over {min, drastic, T_c with random c}.
  SummandList random_summands(const FiniteLattice& lattice);

  /// Nondecreasing chain of 1..max_points points.
  ChainSpec random_chain(const FiniteLattice& lattice, std::size_t max_points);

  /// A t-norm on `carrier`, drawn as in random_summands.
  OpTable random_tnorm(const Interval& carrier);

  /// Closed commutative table on `carrier`: raw random, boundary-respecting
  /// random, or a t-norm with one symmetric pair of cells perturbed.
  OpTable random_commutative_table(const Interval& carrier);

  std::size_t below(std::size_t n);  // uniform in [0, n)
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

private:
  GenConfig cfg_;
  GenStats stats_;
  std::mt19937_64 rng_;
};

inline FiniteLattice random_lattice(const GenConfig& cfg) { return Generator(cfg).random_lattice(); }

/// (1/(3 pi)) arctan(i) + 1/2.
double arctan_chain_value(long long i);
/// Round half up to the nearest multiple of 1/grid_size, as a grid index.
std::size_t snap_to_grid(double value, std::size_t grid_size);

/// Diagonal chain c_i = (q(i), q(i)) on product(grid_chain(n), grid_chain(n))
/// for i in [i_min, i_max], q snapped and made nondecreasing by a running
/// maximum. Throws GridTooCoarse when every point snaps to the same value.
ChainSpec arctan_chain_grid(std::size_t grid_size, long long i_min, long long i_max);
/// Same, on a caller-built product grid.
ChainSpec arctan_chain_grid(const FiniteLattice& grid2d, std::size_t grid_size, long long i_min, long long i_max);

/// Restricts summands to a sublattice that keeps every end point and on
/// which every table stays closed. Throws otherwise.
SummandList restrict_summands(const SummandList& summands, const FiniteLattice& sub);

/// Greedy element removal while `still_fails` holds and the restriction is
/// valid. Best effort: the result need not be minimal.
SummandList minimize_case(const SummandList& summands, const std::function<bool(const SummandList&)>& still_fails);

}  // namespace ordsum

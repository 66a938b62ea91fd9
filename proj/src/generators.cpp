#include "ordsum/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

std::string middle_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "m" + std::to_string(i);
}

std::vector<ElementId> up_set(const FiniteLattice& l, ElementId x) {
  std::vector<ElementId> out;
  for (auto y : l.elements())
    if (l.leq(x, y)) out.push_back(y);
  return out;
}

}  // namespace

Generator::Generator(GenConfig cfg) : cfg_(cfg), rng_(cfg.seed) {}

std::size_t Generator::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

FiniteLattice Generator::random_lattice() {
  if (cfg_.max_elements < 2) throw std::invalid_argument("max_elements must be at least 2");
  return random_lattice(2 + below(cfg_.max_elements - 1));
}

FiniteLattice Generator::random_lattice(std::size_t n) {
  if (n < 2) throw std::invalid_argument("a bounded lattice needs at least 2 elements here");
  const std::size_t m = n - 2;
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i < m; ++i) labels.push_back(middle_label(i));
  labels.push_back("1");

  for (std::size_t attempt = 0; attempt < cfg_.retry_cap; ++attempt) {
    ++stats_.lattice_attempts;
    // Edge density varies per attempt so both wide and tall shapes show up.
    const std::size_t density = 15 + below(51);
    std::vector<LabelPair> covers;
    for (std::size_t i = 0; i < m; ++i) {
      covers.emplace_back("0", labels[i + 1]);
      covers.emplace_back(labels[i + 1], "1");
      for (std::size_t j = i + 1; j < m; ++j)
        if (below(100) < density) covers.emplace_back(labels[i + 1], labels[j + 1]);
    }
    if (m == 0) covers.emplace_back("0", "1");
    try {
      auto l = build_lattice(labels, covers);
      ++stats_.lattice_accepted;
      return l;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
    }
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no lattice on " + std::to_string(n) + " elements after " + std::to_string(cfg_.retry_cap) + " attempts");
}

OpTable Generator::random_tnorm(const Interval& carrier) {
  if (carrier.size() <= kEnumerationCap) return pick(enumerate_tnorms(carrier));
  switch (below(3)) {
    case 0: return t_min(carrier);
    case 1: return t_drastic(carrier);
    default: {
      const auto c = carrier.carrier()[below(carrier.size())];
      return t_c(carrier, c);
    }
  }
}

SummandList Generator::random_summands(const FiniteLattice& lattice) {
  if (cfg_.max_summands < 1) throw std::invalid_argument("max_summands must be at least 1");
  const std::size_t k = 1 + below(cfg_.max_summands);
  std::vector<Summand> summands;
  ElementId cur = lattice.bottom();
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = pick(up_set(lattice, cur));
    const auto b = pick(up_set(lattice, a));
    summands.push_back(make_summand(random_tnorm(Interval(lattice, a, b))));
    cur = b;
    if (cur == lattice.top()) break;
  }
  return SummandList(lattice, std::move(summands));
}

ChainSpec Generator::random_chain(const FiniteLattice& lattice, std::size_t max_points) {
  if (max_points < 1) throw std::invalid_argument("max_points must be at least 1");
  const std::size_t k = 1 + below(max_points);
  const auto all = lattice.elements();
  std::vector<ElementId> points{pick(all)};
  while (points.size() < k) points.push_back(pick(up_set(lattice, points.back())));
  return ChainSpec(lattice, std::move(points));
}

OpTable Generator::random_commutative_table(const Interval& carrier) {
  const auto& l = carrier.lattice();
  const auto xs = carrier.carrier();
  const std::size_t n = xs.size();
  std::vector<ElementId> e(n * n);
  const auto set = [&](std::size_t i, std::size_t j, ElementId v) { e[i * n + j] = e[j * n + i] = v; };

  switch (below(3)) {
    case 0:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) set(i, j, xs[below(n)]);
      break;
    case 1:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          if (xs[i] == carrier.hi() || xs[j] == carrier.hi()) {
            set(i, j, l.meet(xs[i], xs[j]));
            continue;
          }
          std::vector<ElementId> below_meet;
          for (auto z : xs)
            if (l.leq(z, l.meet(xs[i], xs[j]))) below_meet.push_back(z);
          set(i, j, pick(below_meet));
        }
      break;
    default: {
      const auto base = random_tnorm(carrier);
      std::copy(base.entries().begin(), base.entries().end(), e.begin());
      const std::size_t i = below(n), j = below(n);
      set(i, j, xs[below(n)]);
      break;
    }
  }
  return OpTable(carrier, std::move(e), "random");
}

double arctan_chain_value(long long i) {
  return std::atan(static_cast<double>(i)) / (3.0 * std::numbers::pi) + 0.5;
}

std::size_t snap_to_grid(double value, std::size_t grid_size) {
  return static_cast<std::size_t>(std::floor(value * static_cast<double>(grid_size) + 0.5));
}

ChainSpec arctan_chain_grid(std::size_t grid_size, long long i_min, long long i_max) {
  const auto g = grid_chain(grid_size);
  return arctan_chain_grid(product(g, g), grid_size, i_min, i_max);
}

ChainSpec arctan_chain_grid(const FiniteLattice& grid2d, std::size_t grid_size, long long i_min, long long i_max) {
  const auto* f = grid2d.factors();
  if (f == nullptr || f->left.size() != grid_size + 1 || f->right.size() != grid_size + 1)
    throw Error(ErrorKind::GridMismatch, "expected the product of two " + std::to_string(grid_size + 1) + "-point grids");
  if (i_min > i_max) throw std::invalid_argument("empty index range");

  std::vector<ElementId> points;
  std::size_t running = 0;
  for (long long i = i_min; i <= i_max; ++i) {
    const std::size_t q = std::max(running, snap_to_grid(arctan_chain_value(i), grid_size));
    running = q;
    const ElementId g{static_cast<std::uint32_t>(q)};
    points.push_back(f->pair(g, g));
  }
  if (i_max > i_min && points.front() == points.back())
    throw Error(ErrorKind::GridTooCoarse, "every chain point snaps to the same grid value");
  return ChainSpec(grid2d, std::move(points));
}

SummandList restrict_summands(const SummandList& summands, const FiniteLattice& sub) {
  const auto& l = summands.lattice();
  std::vector<Summand> out;
  for (const auto& s : summands.summands()) {
    Interval iv(sub, sub.at(l.label(s.interval.lo())), sub.at(l.label(s.interval.hi())));
    std::vector<ElementId> e;
    for (auto x : iv.carrier())
      for (auto y : iv.carrier()) {
        const auto v = s.tnorm(l.at(sub.label(x)), l.at(sub.label(y)));
        const auto mapped = sub.find(l.label(v));
        if (!mapped) throw Error(ErrorKind::ClosureError, "restriction drops the value '" + l.label(v) + "'");
        e.push_back(*mapped);
      }
    out.push_back(make_summand(OpTable(iv, std::move(e), s.tnorm.name())));
  }
  return SummandList(sub, std::move(out));
}

SummandList minimize_case(const SummandList& summands, const std::function<bool(const SummandList&)>& still_fails) {
  SummandList current = summands;
  for (bool progress = true; progress;) {
    progress = false;
    const auto& l = current.lattice();
    for (auto x : l.elements()) {
      if (x == l.bottom() || x == l.top()) continue;
      std::vector<ElementId> keep;
      for (auto y : l.elements())
        if (y != x) keep.push_back(y);
      try {
        auto candidate = restrict_summands(current, induced_sublattice(l, keep));
        if (!still_fails(candidate)) continue;
        current = std::move(candidate);
        progress = true;
        break;
      } catch (const Error&) {
        continue;
      }
    }
  }
  return current;
}

}  // namespace ordsum

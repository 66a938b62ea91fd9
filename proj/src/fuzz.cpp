#include "ordsum/fuzz.hpp"

#include <algorithm>

#include "ordsum/errors.hpp"
#include "ordsum/oracle.hpp"

namespace ordsum {

namespace {

std::string at(const FiniteLattice& l, ElementId x, ElementId y) {
  return "(" + l.label(x) + ", " + l.label(y) + ")";
}

std::optional<std::string> first_difference(const std::string& what, const OpTable& a, const OpTable& b) {
  if (a == b) return std::nullopt;
  const auto& l = a.lattice();
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (a.entries()[i] != b.entries()[i]) {
      const auto x = a.carrier().carrier()[i / a.size()], y = a.carrier().carrier()[i % a.size()];
      return what + " differ at " + at(l, x, y) + ": " + l.label(a.entries()[i]) + " vs " +
             l.label(b.entries()[i]);
    }
  return what + " live on different carriers";
}

bool is_chain(const FiniteLattice& l) {
  for (auto x : l.elements())
    for (auto y : l.elements())
      if (!l.comparable(x, y)) return false;
  return true;
}

}  // namespace

std::optional<std::string> check_projection_identities(const ChainSpec& chain, const OpTable& t) {
  const auto& l = chain.lattice();
  const auto dec = decompose(chain);
  const auto top = l.top();

  for (auto x : l.elements()) {
    for (auto y : l.elements()) {
      if (y == top) continue;
      if (dec.a1.contains(x) && t(x, y) != t(l.meet(x, dec.chain_meet), y))
        return "T(x, y) != T(x ∧ c, y) for x in A1 at " + at(l, x, y);
      if (const auto i = dec.a2_index(x)) {
        const auto ci = chain.point(static_cast<long long>(i));
        if (t(x, y) != t(l.meet(x, ci), y))
          return "T(x, y) != T(x ∧ c_" + std::to_string(i) + ", y) for x in A2 at " + at(l, x, y);
      }
    }
  }

  const auto s2 = dec.s2.members();
  const auto sub = induced_sublattice(l, s2);
  std::vector<ElementId> entries;
  for (auto x : s2) {
    for (auto y : s2) {
      const auto v = t(x, y);
      if (!dec.s2.contains(v)) return "T on S2 leaves S2 at " + at(l, x, y);
      bool square = false;
      for (std::size_t i = 1; i <= chain.interval_count() && !square; ++i) {
        const auto lo = chain.point(static_cast<long long>(i) - 1), hi = chain.point(static_cast<long long>(i));
        square = in_closed(l, x, lo, hi) && in_closed(l, y, lo, hi);
      }
      if (!square && v != l.meet(x, y)) return "T on S2 is not the meet off the squares at " + at(l, x, y);
      entries.push_back(sub.at(l.label(v)));
    }
  }
  const OpTable restricted(whole(sub), std::move(entries), "restriction");
  if (!oracle_check(restricted).is_tnorm()) return "T restricted to S2 is not a t-norm";
  return std::nullopt;
}

std::optional<std::string> check_construction(const SummandList& summands, Exec exec) {
  const auto& l = summands.lattice();
  const OsOptions opts{exec, false, true};
  try {
    const auto t = os_general_route(summands, OsRoute::Interleaved, opts);
    if (auto d = first_difference("interleaved and closed-form routes",
                                  t, os_general_route(summands, OsRoute::Finite, opts)))
      return d;
    if (auto d = first_difference("interleaved and padded routes",
                                  t, os_general_route(summands, OsRoute::Padded, opts)))
      return d;

    const auto oracle = oracle_check(t);
    if (!oracle.is_tnorm()) return "ordinal sum is not a t-norm:\n" + describe(t, oracle);
    if (!same_flags(oracle, check_tnorm(t, exec))) return "check_tnorm disagrees with the oracle";

    const auto [chain, tnorms] = interleave_chain(summands);
    if (auto obs = check_projection_identities(chain, t)) return "identity: " + *obs;

    // Directly contiguous lists also run on their own (undoubled) chain.
    bool contiguous = true;
    for (std::size_t i = 0; i + 1 < summands.size(); ++i)
      contiguous = contiguous && summands[i].interval.hi() == summands[i + 1].interval.lo();
    if (contiguous) {
      std::vector<ElementId> points{summands[0].interval.lo()};
      std::vector<OpTable> direct;
      for (const auto& s : summands.summands()) {
        points.push_back(s.interval.hi());
        direct.push_back(s.tnorm);
      }
      const ChainSpec own(l, points);
      const auto c = os_contiguous(own, direct, opts);
      if (auto d = first_difference("contiguous and general sums", c, t)) return d;
      if (auto obs = check_projection_identities(own, c)) return "identity (own chain): " + *obs;
    }

    if (summands.size() == 1) {
      const auto& s = summands[0];
      if (auto d = first_difference("os_one and os_general",
                                    os_one(l, s.interval.lo(), s.interval.hi(), s.tnorm, opts), t))
        return d;
      if (s.interval.hi() == l.top())
        if (auto d = first_difference("os_one(b = 1) and os_ertugrul", os_ertugrul(l, s.interval.lo(), s.tnorm, opts), t))
          return d;
    }
    if (is_chain(l))
      if (auto d = first_difference("os_general and os_saminger on a chain", os_saminger(summands, opts), t))
        return d;
  } catch (const std::logic_error& e) {
    return std::string("internal consistency: ") + e.what();
  } catch (const Error& e) {
    return std::string("unexpected error: ") + e.what();
  }
  return std::nullopt;
}

std::optional<std::string> check_grid_reduction(std::size_t grid_size, std::span<const GridSummand> summands) {
  try {
    const auto grid = grid_chain(grid_size);
    const auto classical = classical_os_unit_interval(grid, summands);
    const auto list = grid_summand_list(grid, summands);
    const auto general = os_general(list);
    if (auto d = first_difference("os_general and classical sum on the grid", general, classical)) return d;
    if (auto d = first_difference("os_saminger and classical sum on the grid", os_saminger(list), classical))
      return d;
  } catch (const std::logic_error& e) {
    return std::string("internal consistency: ") + e.what();
  } catch (const Error& e) {
    return std::string("unexpected error: ") + e.what();
  }
  return std::nullopt;
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  Generator gen(cfg.gen);
  FuzzReport report;
  auto& st = report.stats;

  const auto record = [&](std::size_t sample, const SummandList& s, const std::string& detail) {
    auto reproducer = cfg.minimize ? minimize_case(s, [&](const SummandList& c) {
      return check_construction(c, cfg.exec).has_value();
    })
                                   : s;
    report.failures.push_back(FuzzFailure{sample, detail, std::move(reproducer)});
  };
  const auto run = [&](std::size_t sample, const SummandList& s) {
    ++st.construction_cases;
    if (auto fail = check_construction(s, cfg.exec)) record(sample, s, *fail);
  };

  for (std::size_t k = 0; k < cfg.gen.sample_count; ++k) {
    ++st.samples;
    const auto lattice = gen.random_lattice();
    const auto summands = gen.random_summands(lattice);
    run(k, summands);

    // One summand <a, 1, T>.
    const auto a = gen.pick(lattice.elements());
    const Interval a1(lattice, a, lattice.top());
    run(k, SummandList(lattice, {make_summand(gen.random_tnorm(a1))}));

    // Contiguous summands over a random chain.
    const auto chain = gen.random_chain(lattice, 4);
    std::vector<Summand> segments;
    if (chain.interval_count() == 0) {
      segments.push_back(make_summand(gen.random_tnorm(chain.segment(0))));
    } else {
      for (std::size_t i = 1; i <= chain.interval_count(); ++i)
        segments.push_back(make_summand(gen.random_tnorm(chain.segment(i))));
    }
    run(k, SummandList(lattice, std::move(segments)));

    // Saminger's construction on the same summands.
    const auto dec = decompose(interleave_chain(summands).first);
    if (!dec.s1.empty()) {
      ++st.with_s1;
      const auto is_tnorm = [&](const SummandList& s) {
        return oracle_check(os_saminger(s, {cfg.exec, false, false})).is_tnorm();
      };
      if (!is_tnorm(summands)) {
        ++st.saminger_failures;
        if (!report.saminger_example)
          report.saminger_example = cfg.minimize ? minimize_case(summands, [&](const SummandList& c) {
            return !is_tnorm(c);
          })
                                                 : summands;
      }
    }

    // Classical sums on a grid chain.
    if (cfg.max_grid >= 1) {
      const std::size_t n = 1 + gen.below(cfg.max_grid);
      const std::size_t count = 1 + gen.below(std::max<std::size_t>(cfg.gen.max_summands, 1));
      std::vector<std::size_t> ends;
      for (std::size_t i = 0; i < 2 * count; ++i) ends.push_back(gen.below(n + 1));
      std::sort(ends.begin(), ends.end());
      std::vector<GridSummand> grid_summands;
      for (std::size_t i = 0; i < count; ++i)
        grid_summands.push_back(gen.below(2) ? grid_lukasiewicz(ends[2 * i], ends[2 * i + 1])
                                             : grid_min(ends[2 * i], ends[2 * i + 1]));
      ++st.grid_cases;
      if (auto fail = check_grid_reduction(n, grid_summands)) {
        const auto grid = grid_chain(n);
        report.failures.push_back(FuzzFailure{k, *fail, grid_summand_list(grid, grid_summands, false)});
      }
    }
  }
  st.lattice_attempts = gen.stats().lattice_attempts;
  st.lattice_accepted = gen.stats().lattice_accepted;
  return report;
}

}  // namespace ordsum

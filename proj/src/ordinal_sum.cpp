#include "ordsum/ordinal_sum.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels/row_scan.hpp"

namespace ordsum {

namespace {

template <class F>
std::vector<ElementId> fill(const FiniteLattice& l, Exec exec, F&& f) {
  const auto n = l.size();
  std::vector<ElementId> out;
  auto cell = [&](std::size_t i, std::size_t j) {
    return f(ElementId{static_cast<std::uint32_t>(i)}, ElementId{static_cast<std::uint32_t>(j)});
  };
  if (exec == Exec::Serial)
    kernels::detail::fill_pairs_serial(n, out, cell);
  else
    kernels::detail::fill_pairs_parallel(n, out, cell);
  return out;
}

enum class Branch { Square, Lambda3, Lambda2 };

// Every branch of the finite closed form that contains (x, y), with its value.
// Branch order: squares, Lambda_3^i, Lambda_2^i (Lambda_2^1 is the I_{a_1}
// branch).
template <class Sink>
void finite_branches(const SummandList& summands, ElementId x, ElementId y, Sink&& sink) {
  const auto& l = summands.lattice();
  const auto& s = summands.summands();
  const auto top = l.top();
  const auto meet = [&](ElementId u, ElementId v) { return l.meet(u, v); };

  for (const auto& [iv, t] : s)
    if (iv.contains(x) && iv.contains(y))
      if (sink(Branch::Square, t(x, y))) return;

  for (const auto& [iv, t] : s) {
    const auto a = iv.lo(), b = iv.hi();
    const auto lambda3 = [&](ElementId u, ElementId v) {
      return in_open(l, u, a, top) && !l.comparable(u, b) && in_right_open(l, v, a, top);
    };
    if (lambda3(x, y) || lambda3(y, x))
      if (sink(Branch::Lambda3, t(meet(x, b), meet(y, b)))) return;
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto a = s[i].interval.lo();
    bool hit;
    if (i == 0) {
      hit = (!l.comparable(x, a) && y != top) || (!l.comparable(y, a) && x != top);
    } else {
      const auto prev_b = s[i - 1].interval.hi();
      const auto lambda2 = [&](ElementId u, ElementId v) {
        return in_open(l, u, prev_b, top) && !l.comparable(u, a) && in_right_open(l, v, prev_b, top);
      };
      hit = lambda2(x, y) || lambda2(y, x);
    }
    if (hit)
      if (sink(Branch::Lambda2, meet(meet(x, y), a))) return;
  }
}

ElementId eval_finite(const SummandList& summands, ElementId x, ElementId y) {
  std::optional<ElementId> v;
  finite_branches(summands, x, y, [&](Branch, ElementId value) {
    v = value;
    return true;
  });
  return v ? *v : summands.lattice().meet(x, y);
}

// The summand family extended to the window 1-pad .. n+pad with degenerate
// end-point summands.
struct PaddedFamily {
  std::vector<ElementId> a, b;
  std::vector<const OpTable*> t;  // null for padded one-point summands
};

PaddedFamily pad(const SummandList& summands, std::size_t pad) {
  const auto& s = summands.summands();
  PaddedFamily f;
  const auto first = s.front().interval.lo(), last = s.back().interval.hi();
  for (std::size_t i = 0; i < pad; ++i) {
    f.a.push_back(first);
    f.b.push_back(first);
    f.t.push_back(nullptr);
  }
  for (const auto& sm : s) {
    f.a.push_back(sm.interval.lo());
    f.b.push_back(sm.interval.hi());
    f.t.push_back(&sm.tnorm);
  }
  for (std::size_t i = 0; i < pad; ++i) {
    f.a.push_back(last);
    f.b.push_back(last);
    f.t.push_back(nullptr);
  }
  return f;
}

ElementId eval_padded(const FiniteLattice& l, const PaddedFamily& f, const std::vector<std::uint8_t>& a1_prime,
                      ElementId x, ElementId y) {
  const auto top = l.top();
  const std::size_t w = f.a.size();
  const auto apply = [&](std::size_t i, ElementId u, ElementId v) {
    // The one-point t-norm on [p, p] maps (p, p) to p.
    return f.t[i] ? (*f.t[i])(u, v) : f.a[i];
  };
  for (std::size_t i = 0; i < w; ++i)
    if (in_closed(l, x, f.a[i], f.b[i]) && in_closed(l, y, f.a[i], f.b[i])) return apply(i, x, y);
  for (std::size_t i = 0; i < w; ++i) {
    const auto lambda3 = [&](ElementId u, ElementId v) {
      return in_open(l, u, f.a[i], top) && !l.comparable(u, f.b[i]) && in_right_open(l, v, f.a[i], top);
    };
    if (lambda3(x, y) || lambda3(y, x)) return apply(i, l.meet(x, f.b[i]), l.meet(y, f.b[i]));
  }
  for (std::size_t i = 1; i < w; ++i) {
    const auto lambda2 = [&](ElementId u, ElementId v) {
      return in_open(l, u, f.b[i - 1], top) && !l.comparable(u, f.a[i]) && in_right_open(l, v, f.b[i - 1], top);
    };
    if (lambda2(x, y) || lambda2(y, x)) return l.meet(l.meet(x, y), f.a[i]);
  }
  const bool lambda1 = (a1_prime[x.index] && y != top) || (a1_prime[y.index] && x != top);
  if (lambda1) return l.meet(l.meet(x, y), f.a.front());  // a = meet of all a_i
  return l.meet(x, y);
}

OpTable padded_route(const SummandList& summands, const OsOptions& opts) {
  const auto& l = summands.lattice();
  const auto f = pad(summands, 2);
  // A'_1: incomparable with some a_i, and the least such index is the left
  // end of the window (standing in for -infinity).
  std::vector<std::uint8_t> a1_prime(l.size(), 0);
  for (auto x : l.elements()) {
    for (std::size_t i = 0; i < f.a.size(); ++i) {
      if (!l.comparable(x, f.a[i])) {
        a1_prime[x.index] = (i == 0);
        break;
      }
    }
  }
  auto entries = fill(l, opts.exec, [&](ElementId x, ElementId y) { return eval_padded(l, f, a1_prime, x, y); });
  return OpTable(whole(l), std::move(entries), "ordinal-sum");
}

void require_same_lattice(const FiniteLattice& l, const OpTable& t) {
  if (!t.lattice().same_as(l)) throw Error(ErrorKind::CarrierMismatch, "t-norm lives on a different lattice");
}

}  // namespace

OpTable os_saminger(const SummandList& summands, const OsOptions& opts) {
  const auto& l = summands.lattice();
  const auto& s = summands.summands();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (auto x : l.elements())
        if (in_open(l, x, s[i].interval.lo(), s[i].interval.hi()) &&
            in_open(l, x, s[j].interval.lo(), s[j].interval.hi()))
          throw Error(ErrorKind::OverlapError, "open intervals of summands " + std::to_string(i + 1) + " and " +
                                                   std::to_string(j + 1) + " share '" + l.label(x) + "'");
  auto entries = fill(l, opts.exec, [&](ElementId x, ElementId y) {
    for (const auto& [iv, t] : s)
      if (iv.contains(x) && iv.contains(y)) return t(x, y);
    return l.meet(x, y);
  });
  return OpTable(whole(l), std::move(entries), "saminger");
}

OpTable os_contiguous(const ChainSpec& chain, std::span<const OpTable> tnorms, const OsOptions& opts) {
  const auto& l = chain.lattice();
  const std::size_t k = chain.interval_count();
  if (tnorms.size() != k)
    throw Error(ErrorKind::CarrierMismatch, std::to_string(tnorms.size()) + " t-norms for " + std::to_string(k) +
                                                " chain segments");
  for (std::size_t i = 1; i <= k; ++i) {
    require_same_lattice(l, tnorms[i - 1]);
    if (!(tnorms[i - 1].carrier() == chain.segment(i)))
      throw Error(ErrorKind::CarrierMismatch, "t-norm " + std::to_string(i) + " does not live on [c_" +
                                                  std::to_string(i - 1) + ", c_" + std::to_string(i) + "]");
  }
  const auto dec = decompose(chain);
  const auto c = dec.chain_meet;

  const auto value = [&](const RegionTag& tag, ElementId x, ElementId y) {
    switch (tag.kind) {
      case RegionTag::Kind::Square: return tnorms[tag.index - 1](x, y);
      case RegionTag::Kind::Delta2: {
        const auto ci = chain.point(static_cast<long long>(tag.index));
        return tnorms[tag.index - 1](l.meet(x, ci), l.meet(y, ci));
      }
      case RegionTag::Kind::Delta1: return l.meet(l.meet(x, y), c);
      case RegionTag::Kind::Fallback: break;
    }
    return l.meet(x, y);
  };

  auto entries = fill(l, opts.exec, [&](ElementId x, ElementId y) {
    if (!opts.audit_regions) return value(classify_pair(dec, x, y), x, y);
    const auto tags = regions_containing(dec, x, y);
    const auto is_square = [](const RegionTag& t) { return t.kind == RegionTag::Kind::Square; };
    const auto squares = static_cast<std::size_t>(std::count_if(tags.begin(), tags.end(), is_square));
    if (squares != tags.size() && tags.size() > 1)
      throw std::logic_error("overlapping branch regions at (" + l.label(x) + ", " + l.label(y) + ")");
    const auto v = value(tags.front(), x, y);
    for (const auto& t : tags)
      if (value(t, x, y) != v)
        throw std::logic_error("adjacent squares disagree at (" + l.label(x) + ", " + l.label(y) + ")");
    return v;
  });
  return OpTable(whole(l), std::move(entries), "ordinal-sum");
}

std::optional<ConflictWitness> find_chain_conflict(const SummandList& summands) {
  const auto& l = summands.lattice();
  for (auto x : l.elements()) {
    for (auto y : l.elements()) {
      std::vector<ElementId> values;
      finite_branches(summands, x, y, [&](Branch branch, ElementId v) {
        if (branch == Branch::Lambda3) values.push_back(v);
        return false;
      });
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      if (values.size() > 1) {
        ConflictWitness w{l.label(x), l.label(y), {}};
        for (auto v : values) w.values.push_back(l.label(v));
        return w;
      }
    }
  }
  return std::nullopt;
}

OpTable os_general_route(const SummandList& summands, OsRoute route, const OsOptions& opts) {
  const auto& l = summands.lattice();
  if (summands.size() == 0) return t_min(whole(l)).renamed("ordinal-sum");
  if (!summands.chain_endpoint_flag()) {
    const std::size_t i = summands.first_chain_violation();
    auto witness = find_chain_conflict(summands);
    std::string msg = "b_" + std::to_string(i) + " = '" + l.label(summands[i - 1].interval.hi()) +
                      "' is not below a_" + std::to_string(i + 1) + " = '" + l.label(summands[i].interval.lo()) + "'";
    if (witness)
      msg += "; T(" + witness->x + ", " + witness->y + ") would be each of {" +
             [&] {
               std::string s;
               for (const auto& v : witness->values) s += (s.empty() ? "" : ", ") + v;
               return s;
             }() +
             "}";
    throw ChainViolationError(i, std::move(witness), msg);
  }
  switch (route) {
    case OsRoute::Interleaved: {
      auto [chain, tnorms] = interleave_chain(summands);
      return os_contiguous(chain, tnorms, opts);
    }
    case OsRoute::Finite: {
      auto entries = fill(l, opts.exec, [&](ElementId x, ElementId y) { return eval_finite(summands, x, y); });
      return OpTable(whole(l), std::move(entries), "ordinal-sum");
    }
    case OsRoute::Padded: return padded_route(summands, opts);
  }
  throw std::logic_error("unknown route");
}

OpTable os_general(const SummandList& summands, const OsOptions& opts) {
  auto result = os_general_route(summands, OsRoute::Interleaved, opts);
  if (opts.cross_check && summands.size() > 0) {
    const auto direct = os_general_route(summands, OsRoute::Finite, opts);
    if (!(direct == result)) {
      const auto& l = summands.lattice();
      for (std::size_t i = 0; i < result.entries().size(); ++i)
        if (result.entries()[i] != direct.entries()[i])
          throw std::logic_error("interleaved and closed-form ordinal sums differ at (" +
                                 l.label(ElementId{static_cast<std::uint32_t>(i / l.size())}) + ", " +
                                 l.label(ElementId{static_cast<std::uint32_t>(i % l.size())}) + ")");
    }
  }
  return result;
}

OpTable os_one(const FiniteLattice& l, ElementId a, ElementId b, const OpTable& t1, const OsOptions& opts) {
  const Interval ab(l, a, b);  // NotComparable when a !<= b
  require_same_lattice(l, t1);
  if (!(t1.carrier() == ab)) throw Error(ErrorKind::CarrierMismatch, "T1 does not live on [a, b]");
  const auto top = l.top();
  const auto in_lambda = [&](ElementId u, ElementId v) {
    return in_open(l, u, a, top) && !l.comparable(u, b) && in_right_open(l, v, a, top);
  };
  auto entries = fill(l, opts.exec, [&](ElementId x, ElementId y) {
    if (ab.contains(x) && ab.contains(y)) return t1(x, y);
    if (in_lambda(x, y) || in_lambda(y, x)) return t1(l.meet(x, b), l.meet(y, b));
    if ((!l.comparable(x, a) && y != top) || (!l.comparable(y, a) && x != top)) return l.meet(l.meet(x, y), a);
    return l.meet(x, y);
  });
  return OpTable(whole(l), std::move(entries), "ordinal-sum");
}

OpTable os_ertugrul(const FiniteLattice& l, ElementId a, const OpTable& t1, const OsOptions& opts) {
  const Interval a1(l, a, l.top());
  require_same_lattice(l, t1);
  if (!(t1.carrier() == a1)) throw Error(ErrorKind::CarrierMismatch, "T1 does not live on [a, 1]");
  const auto top = l.top();
  auto entries = fill(l, opts.exec, [&](ElementId x, ElementId y) {
    if (a1.contains(x) && a1.contains(y)) return t1(x, y);
    if ((!l.comparable(x, a) && y != top) || (!l.comparable(y, a) && x != top)) return l.meet(l.meet(x, y), a);
    return l.meet(x, y);
  });
  return OpTable(whole(l), std::move(entries), "ertugrul");
}

GridSummand grid_min(std::size_t lo, std::size_t hi) {
  GridSummand g{lo, hi, {}};
  for (std::size_t x = lo; x <= hi; ++x)
    for (std::size_t y = lo; y <= hi; ++y) g.table.push_back(std::min(x, y));
  return g;
}

GridSummand grid_lukasiewicz(std::size_t lo, std::size_t hi) {
  GridSummand g{lo, hi, {}};
  for (std::size_t x = lo; x <= hi; ++x)
    for (std::size_t y = lo; y <= hi; ++y) g.table.push_back(x + y >= hi + lo ? x + y - hi : lo);
  return g;
}

namespace {

void check_grid_summands(std::size_t grid_size, std::span<const GridSummand> summands) {
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& g = summands[i];
    const std::string where = "grid summand " + std::to_string(i + 1);
    if (g.lo > g.hi || g.hi > grid_size) throw Error(ErrorKind::GridMismatch, where + " has bad end points");
    const std::size_t w = g.hi - g.lo + 1;
    if (g.table.size() != w * w) throw Error(ErrorKind::GridMismatch, where + " table has the wrong size");
    for (auto v : g.table)
      if (v < g.lo || v > g.hi) throw Error(ErrorKind::GridMismatch, where + " table leaves its grid interval");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& h = summands[j];
      // Open intervals ]lo, hi[ on a chain meet iff they share a grid point
      // strictly inside both.
      if (std::max(g.lo, h.lo) + 1 < std::min(g.hi, h.hi))
        throw Error(ErrorKind::OverlapError, where + " overlaps grid summand " + std::to_string(j + 1));
    }
  }
}

}  // namespace

OpTable classical_os_unit_interval(const FiniteLattice& grid, std::span<const GridSummand> summands) {
  const std::size_t n = grid.size() - 1;
  if (grid.size() < 2 || grid.label(grid.bottom()) != grid_label(0, n) || grid.label(grid.top()) != grid_label(n, n))
    throw Error(ErrorKind::GridMismatch, "lattice is not a grid chain");
  check_grid_summands(n, summands);
  std::vector<ElementId> entries;
  entries.reserve((n + 1) * (n + 1));
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t y = 0; y <= n; ++y) {
      std::size_t v = std::min(x, y);
      for (const auto& g : summands) {
        if (x >= g.lo && x <= g.hi && y >= g.lo && y <= g.hi) {
          v = g.table[(x - g.lo) * (g.hi - g.lo + 1) + (y - g.lo)];
          break;
        }
      }
      entries.push_back(ElementId{static_cast<std::uint32_t>(v)});
    }
  }
  return OpTable(whole(grid), std::move(entries), "classical");
}

OpTable classical_os_unit_interval(std::size_t grid_size, std::span<const GridSummand> summands) {
  return classical_os_unit_interval(grid_chain(grid_size), summands);
}

SummandList grid_summand_list(const FiniteLattice& grid, std::span<const GridSummand> summands, bool validate) {
  check_grid_summands(grid.size() - 1, summands);
  std::vector<Summand> out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& g = summands[i];
    const auto id = [](std::size_t k) { return ElementId{static_cast<std::uint32_t>(k)}; };
    Interval iv(grid, id(g.lo), id(g.hi));
    std::vector<ElementId> entries;
    for (auto v : g.table) entries.push_back(id(v));
    out.push_back(Summand{iv, OpTable(iv, std::move(entries), "grid#" + std::to_string(i + 1))});
  }
  return SummandList(grid, std::move(out), validate);
}

}  // namespace ordsum

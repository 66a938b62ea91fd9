#include <doctest.h>

#include <algorithm>
#include <functional>

#include "ordsum/errors.hpp"
#include "ordsum/generators.hpp"
#include "ordsum/oracle.hpp"
#include "ordsum/tnorm.hpp"
#include "support.hpp"

using namespace ordsum;
using test::id;

namespace {

using Entries = std::vector<std::uint32_t>;

Entries as_indices(const OpTable& t) {
  Entries out;
  for (auto e : t.entries()) out.push_back(e.index);
  return out;
}

/// All commutative tables with the top row fixed to the identity whose
/// remaining cells range over `choices(x, y)`, filtered by the oracle.
std::vector<Entries> brute_force_tnorms(const Interval& iv,
                                        const std::function<std::vector<ElementId>(ElementId, ElementId)>& choices) {
  const auto xs = iv.carrier();
  const std::size_t n = xs.size();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (xs[i] != iv.hi() && xs[j] != iv.hi()) cells.emplace_back(i, j);

  std::vector<ElementId> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (xs[i] == iv.hi()) table[i * n + j] = xs[j];
      else if (xs[j] == iv.hi()) table[i * n + j] = xs[i];

  std::vector<Entries> found;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      const OpTable t(iv, table, "candidate");
      if (oracle_check(t).is_tnorm()) found.push_back(as_indices(t));
      return;
    }
    const auto [i, j] = cells[k];
    for (auto v : choices(xs[i], xs[j])) {
      table[i * n + j] = table[j * n + i] = v;
      go(k + 1);
    }
  };
  go(0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Entries> enumerated(const Interval& iv) {
  std::vector<Entries> out;
  for (const auto& t : enumerate_tnorms(iv)) out.push_back(as_indices(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteLattice> small_lattices() {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    if (n == 0) out.push_back(build_lattice({"0"}, {}));
    else out.push_back(grid_chain(n));
  }
  out.push_back(product(grid_chain(1), grid_chain(1)));
  out.push_back(test::lattice_fixture("two_atoms.lattice"));
  out.push_back(build_lattice({"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
  out.push_back(build_lattice({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"0", "c"}, {"b", "1"}, {"c", "1"}}));
  return out;
}

}  // namespace

TEST_SUITE("tnorm") {
  TEST_CASE("tables are closed and sized to the carrier") {
    const auto f1 = test::lattice_fixture("two_atoms.lattice");
    const Interval a1(f1, id(f1, "a"), f1.top());
    CHECK_THROWS_AS(OpTable(a1, std::vector<ElementId>(4, f1.top()), "short"), Error);
    std::vector<ElementId> e(9, f1.top());
    e[4] = id(f1, "b");
    try {
      OpTable(a1, e, "escapes");
      FAIL("accepted an escaping entry");
    } catch (const ClosureError& err) {
      CHECK(err.row() == 1);
      CHECK(err.col() == 1);
    }
  }

  TEST_CASE("canonical families are t-norms ordered drastic <= T_c <= min") {
    for (const auto& name : {"two_atoms.lattice", "two_chains.lattice", "thirteen.lattice"}) {
      const auto l = test::lattice_fixture(name);
      for (auto lo : l.elements())
        for (auto hi : l.elements()) {
          if (!l.leq(lo, hi)) continue;
          const Interval iv(l, lo, hi);
          const auto mn = t_min(iv), dr = t_drastic(iv);
          CHECK(check_tnorm(mn).is_tnorm());
          CHECK(check_tnorm(dr).is_tnorm());
          for (auto c : iv.carrier()) {
            const auto tc = t_c(iv, c);
            CHECK(check_tnorm(tc).is_tnorm());
            CHECK(pointwise_leq(dr, tc));
            CHECK(pointwise_leq(tc, mn));
          }
        }
    }
  }

  TEST_CASE("enumeration matches brute force over all commutative tables") {
    for (const auto& l : small_lattices()) {
      if (l.size() > 4) continue;
      const auto iv = whole(l);
      const auto all = [&](ElementId, ElementId) {
        std::vector<ElementId> v(iv.carrier().begin(), iv.carrier().end());
        return v;
      };
      CHECK(enumerated(iv) == brute_force_tnorms(iv, all));
    }
  }

  TEST_CASE("enumeration matches brute force below the meet on five elements") {
    for (const auto& l : small_lattices()) {
      const auto iv = whole(l);
      const auto below_meet = [&](ElementId x, ElementId y) {
        std::vector<ElementId> v;
        for (auto z : iv.carrier())
          if (l.leq(z, l.meet(x, y))) v.push_back(z);
        return v;
      };
      const auto expected = brute_force_tnorms(iv, below_meet);
      CHECK(enumerated(iv) == expected);
      CHECK_FALSE(expected.empty());
    }
    CHECK(enumerate_tnorms(whole(grid_chain(1))).size() == 1);
    CHECK(enumerate_tnorms(whole(grid_chain(2))).size() == 2);
    CHECK_THROWS_AS(enumerate_tnorms(whole(grid_chain(5))), Error);
  }

  TEST_CASE("serial and parallel checks agree with the oracle on flags and witnesses") {
    Generator gen(GenConfig{11});
    for (int k = 0; k < 300; ++k) {
      const auto l = gen.random_lattice();
      const auto t = gen.random_commutative_table(whole(l));
      const auto s = check_tnorm(t, Exec::Serial), p = check_tnorm(t, Exec::Parallel), o = oracle_check(t);
      CHECK(same_flags(s, o));
      CHECK(same_flags(p, o));
      CHECK(s.associativity_witness == p.associativity_witness);
      CHECK(s.increasing_witness == p.increasing_witness);
      // Both scan in carrier order, so the first witness is the same.
      CHECK(s.associativity_witness == o.associativity_witness);
      CHECK(s.increasing_witness == o.increasing_witness);
      CHECK(s.neutrality_witness == o.neutrality_witness);
      CHECK(witnesses_falsify(t, s));
    }
  }

  TEST_CASE("non-commutative tables are caught") {
    const auto l = grid_chain(2);
    const auto iv = whole(l);
    const auto mn = t_min(iv);
    std::vector<ElementId> e(mn.entries().begin(), mn.entries().end());
    e[1 * 3 + 0] = ElementId{1};  // T(1/2, 0) = 1/2 but T(0, 1/2) = 0
    const OpTable t(iv, e, "skew");
    const auto r = check_tnorm(t);
    CHECK_FALSE(r.commutative);
    CHECK(r.commutativity_witness == std::array{ElementId{0}, ElementId{1}});
    CHECK_FALSE(oracle_check(t).commutative);
  }

  TEST_CASE("componentwise products of t-norms") {
    const auto c2 = grid_chain(2), c3 = grid_chain(3);
    const auto p = product(c2, c3);
    const auto* f = p.factors();
    const Interval pi(p, p.bottom(), p.top());
    const auto t = t_product(t_drastic(whole(c2)), t_c(whole(c3), ElementId{1}), pi);
    CHECK(check_tnorm(t).is_tnorm());
    const Interval lower(p, p.bottom(), f->pair(ElementId{1}, ElementId{3}));
    CHECK_THROWS_AS(t_product(t_min(whole(c2)), t_min(whole(c3)), lower), Error);
  }
}

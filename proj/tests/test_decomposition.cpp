#include <doctest.h>

#include "ordsum/decomposition.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/generators.hpp"
#include "support.hpp"

using namespace ordsum;
using test::id;

namespace {

std::vector<std::string> labels(const FiniteLattice& l, const ElementSet& s) {
  std::vector<std::string> out;
  for (auto x : s.members()) out.push_back(l.label(x));
  return out;
}

using Names = std::vector<std::string>;

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("thirteen-element lattice relative to a d f h") {
    const auto l = test::lattice_fixture("thirteen.lattice");
    const auto d = decompose(l, {id(l, "a"), id(l, "d"), id(l, "f"), id(l, "h")});
    CHECK(labels(l, d.s1) == Names{"e", "i", "j", "k"});
    CHECK(labels(l, d.a1) == Names{"k"});
    REQUIRE(d.a2.size() == 3);
    CHECK(labels(l, d.a2[0]) == Names{"e"});
    CHECK(d.a2[1].empty());
    CHECK(labels(l, d.a2[2]) == Names{"i", "j"});
    CHECK(labels(l, d.b1) == Names{"h", "1"});
    CHECK(labels(l, d.b2) == Names{"0", "a"});
    CHECK(labels(l, d.b3) == Names{"a", "b", "c", "d", "f", "g", "h"});
    CHECK(d.a2_index(id(l, "j")) == 3);
    CHECK(d.a2_index(id(l, "k")) == 0);
  }

  TEST_CASE("small cases") {
    const auto two = test::lattice_fixture("two_chain.lattice");
    CHECK(decompose(two, {two.bottom(), two.top()}).s1.empty());
    const auto f1 = test::lattice_fixture("two_atoms.lattice");
    const auto d = decompose(f1, {id(f1, "a"), f1.top()});
    CHECK(labels(f1, d.a1) == Names{"b"});
    CHECK(d.a2[0].empty());
  }

  TEST_CASE("chains must be nondecreasing") {
    const auto f1 = test::lattice_fixture("two_atoms.lattice");
    CHECK_THROWS_AS(ChainSpec(f1, {id(f1, "a"), id(f1, "b")}), Error);
    CHECK_THROWS_AS(ChainSpec(f1, {}), Error);
    CHECK_NOTHROW(ChainSpec(f1, {id(f1, "a"), id(f1, "a"), id(f1, "c")}));
    const ChainSpec c(f1, {id(f1, "a"), id(f1, "c")});
    CHECK(c.point(-4) == id(f1, "a"));
    CHECK(c.point(9) == id(f1, "c"));
  }

  TEST_CASE("the sets partition the lattice on random chains") {
    Generator gen(GenConfig{3});
    for (int k = 0; k < 300; ++k) {
      const auto l = gen.random_lattice();
      const auto chain = gen.random_chain(l, 5);
      const auto d = decompose(chain);
      for (auto x : l.elements()) {
        CHECK(d.s1.contains(x) != d.s2.contains(x));
        // S1 splits into A1 and the A2 blocks, each element in exactly one.
        std::size_t blocks = d.a1.contains(x);
        for (const auto& a : d.a2) blocks += a.contains(x);
        CHECK(blocks == (d.s1.contains(x) ? 1u : 0u));
        // S2 is covered by B1, B2 and B3.
        if (d.s2.contains(x)) CHECK((d.b1.contains(x) || d.b2.contains(x) || d.b3.contains(x)));
        if (d.b1.contains(x) || d.b2.contains(x) || d.b3.contains(x)) CHECK(d.s2.contains(x));
      }
      for (auto x : l.elements())
        for (auto y : l.elements()) {
          const auto tags = regions_containing(d, x, y);
          CHECK(classify_pair(d, x, y) == tags.front());
          std::size_t others = 0;
          for (const auto& t : tags) others += t.kind != RegionTag::Kind::Square;
          if (tags.size() > 1) CHECK(others == 0);
        }
    }
  }

  TEST_CASE("interleaving doubles the chain") {
    const auto l = test::lattice_fixture("thirteen.lattice");
    const auto s = read_summands_file(test::fixture("thirteen.summands"), l);
    const auto [chain, tnorms] = interleave_chain(s);
    CHECK(chain.points() == std::vector{id(l, "a"), id(l, "d"), id(l, "f"), id(l, "h")});
    REQUIRE(tnorms.size() == 3);
    CHECK(tnorms[1] == t_min(Interval(l, id(l, "d"), id(l, "f"))));
  }

  TEST_CASE("snapped arctan chain") {
    const auto g = grid_chain(12);
    const auto grid = product(g, g);
    const auto* f = grid.factors();
    const auto chain = arctan_chain_grid(grid, 12, -3, 3);
    CHECK(chain.points().size() == 7);
    for (std::size_t i = 1; i < chain.points().size(); ++i)
      CHECK(grid.leq(chain.points()[i - 1], chain.points()[i]));
    for (auto p : chain.points()) {
      CHECK(f->first(p) == f->second(p));
      CHECK(f->first(p).index >= 4);
      CHECK(f->first(p).index <= 8);
    }
    for (std::size_t n : {2u, 4u, 12u, 20u}) {
      const auto c = arctan_chain_grid(n, 0, 0);
      const auto* fn = c.lattice().factors();
      CHECK(fn->first(c.point(0)).index * 2 == n);
    }
    CHECK(snap_to_grid(0.5, 3) == 2);
    CHECK_THROWS_AS(arctan_chain_grid(2, -5, 5), Error);
  }
}

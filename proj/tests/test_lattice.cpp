#include <doctest.h>

#include <functional>
#include <set>

#include "ordsum/errors.hpp"
#include "ordsum/generators.hpp"
#include "ordsum/lattice.hpp"
#include "support.hpp"

using namespace ordsum;
using test::id;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("fixture lattices have the expected shape") {
    const auto f1 = test::lattice_fixture("two_atoms.lattice");
    CHECK(f1.size() == 5);
    CHECK(f1.covers().size() == 5);
    CHECK(f1.height() == 3);
    CHECK(f1.meet(id(f1, "a"), id(f1, "b")) == f1.bottom());
    CHECK(f1.join(id(f1, "a"), id(f1, "b")) == id(f1, "c"));
    CHECK(f1.incomparables(id(f1, "a")) == std::vector{id(f1, "b")});

    const auto f3 = test::lattice_fixture("thirteen.lattice");
    CHECK(f3.size() == 13);
    CHECK(f3.covers().size() == 17);
    CHECK(f3.meet(id(f3, "e"), id(f3, "d")) == id(f3, "c"));
    CHECK(f3.join(id(f3, "h"), id(f3, "i")) == f3.top());
    CHECK(f3.meet(id(f3, "k"), id(f3, "j")) == f3.bottom());
    // a < c < e is one chain; the redundant a < e never appears as a cover.
    CHECK(f3.leq(id(f3, "a"), id(f3, "e")));
    for (const auto& [lo, hi] : f3.covers()) CHECK_FALSE((lo == id(f3, "a") && hi == id(f3, "e")));
  }

  TEST_CASE("construction errors") {
    CHECK(kind_of([] { build_lattice({"0", "0"}, {}); }) == ErrorKind::DuplicateLabel);
    CHECK(kind_of([] { build_lattice({"0", "1"}, {{"0", "x"}}); }) == ErrorKind::UnknownLabel);
    CHECK(kind_of([] { build_lattice({"0", "1"}, {{"0", "0"}, {"0", "1"}}); }) == ErrorKind::CycleDetected);
    CHECK(kind_of([] { build_lattice({"0", "a", "1"}, {{"0", "a"}, {"a", "0"}, {"a", "1"}}); }) ==
          ErrorKind::CycleDetected);
    CHECK(kind_of([] { build_lattice({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }) == ErrorKind::NoBounds);

    try {
      test::lattice_fixture("non_lattice.lattice");
      FAIL("accepted a non-lattice");
    } catch (const NotALatticeError& e) {
      CHECK(e.x() == "a");
      CHECK(e.y() == "b");
    }
  }

  TEST_CASE("redundant covers are reduced away") {
    const auto l = build_lattice({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"0", "1"}});
    CHECK(l.covers().size() == 2);
  }

  TEST_CASE("intervals") {
    const auto f1 = test::lattice_fixture("two_atoms.lattice");
    const Interval a1(f1, id(f1, "a"), f1.top());
    CHECK(a1.size() == 3);
    CHECK(a1.contains(id(f1, "c")));
    CHECK_FALSE(a1.contains(id(f1, "b")));
    CHECK(a1.position(f1.top()) == 2);
    CHECK(kind_of([&] { Interval(f1, id(f1, "a"), id(f1, "b")); }) == ErrorKind::NotComparable);
    CHECK(kind_of([&] { a1.position(id(f1, "b")); }) == ErrorKind::ForeignElement);
  }

  TEST_CASE("product and grids") {
    const auto g = grid_chain(4);
    CHECK(g.size() == 5);
    CHECK(g.label(g.bottom()) == "0.0000");
    CHECK(g.label(ElementId{1}) == "0.2500");
    const auto p = product(grid_chain(1), grid_chain(2));
    CHECK(p.size() == 6);
    CHECK(p.covers().size() == 7);
    const auto* f = p.factors();
    REQUIRE(f != nullptr);
    const auto x = f->pair(ElementId{1}, ElementId{0}), y = f->pair(ElementId{0}, ElementId{2});
    CHECK_FALSE(p.comparable(x, y));
    CHECK(p.meet(x, y) == p.bottom());
    CHECK(p.join(x, y) == p.top());
    CHECK(p.label(x) == "(1.0000,0.0000)");
    CHECK(kind_of([] { product(grid_chain(99), grid_chain(99), 100); }) == ErrorKind::SizeLimit);
  }

  TEST_CASE("induced sublattices") {
    const auto f1 = test::lattice_fixture("two_atoms.lattice");
    const std::vector keep{f1.bottom(), id(f1, "a"), id(f1, "c"), f1.top()};
    const auto chain = induced_sublattice(f1, keep);
    CHECK(chain.size() == 4);
    CHECK(chain.height() == 3);
  }

  TEST_CASE("random lattices satisfy the lattice laws") {
    Generator gen(GenConfig{7});
    for (int k = 0; k < 200; ++k) {
      const auto l = gen.random_lattice();
      REQUIRE(test::is_bounded_lattice(l));
      const auto xs = l.elements();
      for (auto x : xs)
        for (auto y : xs) {
          CHECK(l.meet(x, y) == l.meet(y, x));
          CHECK(l.leq(x, y) == (l.meet(x, y) == x));
          CHECK(l.leq(x, y) == (l.join(x, y) == y));
          CHECK(l.meet(x, l.join(x, y)) == x);
          for (auto z : xs) CHECK(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
        }
      std::set<std::pair<std::uint32_t, std::uint32_t>> covers;
      for (const auto& [lo, hi] : l.covers()) {
        covers.insert({lo.index, hi.index});
        CHECK(l.lt(lo, hi));
        CHECK(l.ranks()[hi.index] >= l.ranks()[lo.index] + 1);
        for (auto z : xs) CHECK_FALSE((l.lt(lo, z) && l.lt(z, hi)));
      }
      for (auto x : xs)
        for (auto y : xs) {
          bool between = false;
          for (auto z : xs) between = between || (l.lt(x, z) && l.lt(z, y));
          CHECK((l.lt(x, y) && !between) == (covers.count({x.index, y.index}) == 1));
        }
    }
  }
}

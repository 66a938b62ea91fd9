#include <doctest.h>

#include "ordsum/errors.hpp"
#include "ordsum/generators.hpp"
#include "ordsum/io.hpp"
#include "ordsum/oracle.hpp"
#include "ordsum/ordinal_sum.hpp"
#include "support.hpp"

using namespace ordsum;
using test::id;

TEST_SUITE("generators") {
  TEST_CASE("same config, same sequence") {
    const auto run = [](std::uint64_t seed) {
      Generator gen(GenConfig{seed});
      std::string out;
      for (int k = 0; k < 30; ++k) {
        const auto l = gen.random_lattice();
        out += serialize_lattice(l);
        const auto s = gen.random_summands(l);
        for (const auto& x : s.summands()) out += serialize_optable(x.tnorm);
        out += serialize_optable(gen.random_commutative_table(whole(l)));
      }
      return out;
    };
    CHECK(run(42) == run(42));
    CHECK(run(42) != run(43));
    Generator a(GenConfig{42}), b(GenConfig{42});
    CHECK(serialize_lattice(a.random_lattice(6)) == serialize_lattice(b.random_lattice(6)));
  }

  TEST_CASE("two elements force the 2-chain") {
    GenConfig cfg{5};
    cfg.max_elements = 2;
    Generator gen(cfg);
    for (int k = 0; k < 10; ++k) {
      const auto l = gen.random_lattice();
      CHECK(l.size() == 2);
      const auto s = gen.random_summands(l);
      REQUIRE(s.size() >= 1);
      if (s[0].interval == whole(l)) CHECK(s[0].tnorm == t_min(whole(l)));
    }
  }

  TEST_CASE("random lattices pass validation") {
    Generator gen(GenConfig{99});
    for (int k = 0; k < 500; ++k) {
      const auto l = gen.random_lattice();
      CHECK(l.size() >= 2);
      CHECK(l.size() <= 9);
      CHECK(test::is_bounded_lattice(l));
    }
    CHECK(gen.stats().lattice_accepted == 500);
    CHECK(gen.stats().acceptance_rate() > 0.0);
    CHECK(gen.stats().acceptance_rate() <= 1.0);
  }

  TEST_CASE("retry cap") {
    GenConfig cfg{1};
    cfg.retry_cap = 0;
    Generator gen(cfg);
    try {
      gen.random_lattice(5);
      FAIL("generated with no attempts");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GenerationExhausted);
    }
  }

  TEST_CASE("random summands form a chain of t-norms") {
    Generator gen(GenConfig{8});
    for (int k = 0; k < 300; ++k) {
      const auto l = gen.random_lattice();
      const auto s = gen.random_summands(l);
      CHECK(s.chain_endpoint_flag());
      CHECK(s.size() >= 1);
      CHECK(s.size() <= 3);
      for (const auto& x : s.summands()) CHECK(oracle_check(x.tnorm).is_tnorm());
    }
  }

  TEST_CASE("pinned seed reproduces the thirteen.summands list") {
    const auto l = test::lattice_fixture("thirteen.lattice");
    Generator gen(GenConfig{37663});
    const auto s = gen.random_summands(l);
    REQUIRE(s.size() == 2);
    CHECK(s[0].tnorm == t_c(Interval(l, id(l, "a"), id(l, "d")), id(l, "c")));
    CHECK(s[1].tnorm == t_drastic(Interval(l, id(l, "f"), id(l, "h"))));
  }

  TEST_CASE("oracle on fixed tables") {
    const auto l = test::lattice_fixture("two_atoms.lattice");
    const auto table1 = read_optable_file(test::fixture("two_atoms_saminger.optable"), l);
    const auto r = oracle_check(table1);
    CHECK_FALSE(r.associative);
    CHECK(same_flags(r, check_tnorm(table1)));
    for (auto lo : l.elements())
      for (auto hi : l.elements())
        if (l.leq(lo, hi)) CHECK(oracle_check(t_min(Interval(l, lo, hi))).is_tnorm());
  }

  TEST_CASE("differential oracle on random tables") {
    Generator gen(GenConfig{77});
    std::size_t tnorms = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto l = gen.random_lattice();
      const auto t = gen.random_commutative_table(whole(l));
      const auto o = oracle_check(t);
      CHECK(same_flags(o, check_tnorm(t)));
      tnorms += o.is_tnorm();
    }
    // The corpus must exercise both outcomes.
    CHECK(tnorms > 0);
    CHECK(tnorms < 1000);
  }

  TEST_CASE("minimizer keeps the failure and shrinks the lattice") {
    // The two-atom lattice with a longer top and a spare atom; Saminger's sum with
    // <a, 1, drastic> fails on it.
    const auto l = build_lattice({"0", "a", "b", "c", "d", "k", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"},
                                                                    {"c", "d"}, {"d", "1"}, {"0", "k"}, {"k", "1"}});
    const SummandList s(l, {make_summand(t_drastic(Interval(l, id(l, "a"), l.top())))});
    const auto fails = [](const SummandList& c) { return !oracle_check(os_saminger(c)).is_tnorm(); };
    REQUIRE(fails(s));
    const auto m = minimize_case(s, fails);
    CHECK(fails(m));
    CHECK(m.lattice().size() < l.size());
    CHECK(m.lattice().find("a"));
  }
}

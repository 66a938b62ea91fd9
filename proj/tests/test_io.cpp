#include <doctest.h>

#include <functional>

#include "ordsum/errors.hpp"
#include "ordsum/generators.hpp"
#include "ordsum/io.hpp"
#include "support.hpp"

using namespace ordsum;
using test::id;

namespace {

std::size_t parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no parse error");
  return 0;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("lattice files round-trip") {
    for (const auto& name : {"two_atoms.lattice", "two_chains.lattice", "thirteen.lattice", "saminger_regression.lattice"}) {
      const auto l = test::lattice_fixture(name);
      const auto text = serialize_lattice(l);
      CHECK(serialize_lattice(parse_lattice(text)) == text);
    }
    Generator gen(GenConfig{21});
    for (int k = 0; k < 100; ++k) {
      const auto l = gen.random_lattice();
      const auto again = parse_lattice(serialize_lattice(l));
      CHECK(serialize_lattice(again) == serialize_lattice(l));
      CHECK(again.order_matrix().size() == l.order_matrix().size());
      CHECK(std::equal(again.order_matrix().begin(), again.order_matrix().end(), l.order_matrix().begin()));
    }
    const auto g = grid_chain(3);
    const auto p = product(g, g);
    CHECK(serialize_lattice(parse_lattice(serialize_lattice(p))) == serialize_lattice(p));
  }

  TEST_CASE("lattice parse errors carry line numbers") {
    CHECK(parse_error_line([] { parse_lattice("latice\n"); }) == 1);
    CHECK(parse_error_line([] { parse_lattice("# c\nlattice\nelements: 0 1\ncovers:\n0 < 2\n"); }) == 5);
    CHECK(parse_error_line([] { parse_lattice("lattice\nelements: 0 a a 1\n"); }) == 2);
    CHECK(parse_error_line([] { parse_lattice("lattice\nelements: 0 1\ncovers:\n0 -> 1\n"); }) == 4);
    CHECK(parse_error_line([] { parse_lattice("lattice\n\nnodes: 0 1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_lattice(""); }) == 1);
    CHECK_THROWS_AS(read_lattice_file(test::fixture("missing.lattice")), ParseError);
  }

  TEST_CASE("op tables round-trip and are checked") {
    const auto l = test::lattice_fixture("thirteen.lattice");
    const auto text = read_text_file(test::fixture("thirteen_reference.optable"));
    const auto t = parse_optable(text, l);
    CHECK(serialize_optable(t) == text);

    CHECK(parse_error_line([&] { parse_optable("optable\ncarrier: f g h\nf f f\nf f g\n", l); }) == 4);
    CHECK(parse_error_line([&] { parse_optable("optable\ncarrier: a b c d\na a a\n", l); }) == 3);
    CHECK(parse_error_line([&] { parse_optable("optable\ncarrier: f g h\nf f f\nf z g\nf g h\n", l); }) == 4);
    CHECK_THROWS_AS(parse_optable("optable\ncarrier: f h g\nf f f\nf f g\nf g h\n", l), Error);
    CHECK_THROWS_AS(parse_optable("optable\ncarrier: f g h\nf f f\nf f a\nf g h\n", l), ClosureError);
  }

  TEST_CASE("summand files") {
    const auto l = test::lattice_fixture("thirteen.lattice");
    const auto s = read_summands_file(test::fixture("thirteen.summands"), l);
    REQUIRE(s.size() == 2);
    CHECK(serialize_summands(s) == "summands\na d c:c\nf h drastic\n");
    CHECK(family_name(t_min(Interval(l, id(l, "f"), id(l, "h")))) == "min");

    const auto r = read_summands_file(test::fixture("saminger_regression.summands"),
                                      test::lattice_fixture("saminger_regression.lattice"));
    REQUIRE(r.size() == 1);
    CHECK_FALSE(family_name(r[0].tnorm));

    CHECK(parse_error_line([&] { parse_summands("summands\na d\n", l); }) == 2);
    CHECK(parse_error_line([&] { parse_summands("summands\na d product\n", l); }) == 2);
    CHECK(parse_error_line([&] { parse_summands("summands\na q min\n", l); }) == 2);
    CHECK_THROWS_AS(parse_summands("summands\nd a min\n", l), Error);
    CHECK_THROWS_AS(parse_summands("summands\na d c:k\n", l), Error);
    CHECK_THROWS_AS(parse_summands("summands\nf h table:thirteen_reference.optable\n", l, ORDSUM_FIXTURE_DIR), Error);
    CHECK(parse_summands("summands\n# nothing\n", l).size() == 0);
  }

  TEST_CASE("dumped cases read back") {
    const auto dir = std::filesystem::temp_directory_path() / "ordsum-io-test";
    std::filesystem::remove_all(dir);
    const auto l = test::lattice_fixture("saminger_regression.lattice");
    const auto s = read_summands_file(test::fixture("saminger_regression.summands"), l);
    const auto written = dump_case(dir, "case", s);
    CHECK(written.size() == 3);
    const auto l2 = read_lattice_file(dir / "case.lattice");
    const auto s2 = read_summands_file(dir / "case.summands", l2);
    REQUIRE(s2.size() == 1);
    CHECK(serialize_optable(s2[0].tnorm) == serialize_optable(s[0].tnorm));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("cayley rendering") {
    const auto l = test::lattice_fixture("two_atoms.lattice");
    const auto out = render_cayley(read_optable_file(test::fixture("two_atoms_saminger.optable"), l));
    CHECK(out ==
          "  | 0 b a c 1\n"
          "--+----------\n"
          "0 | 0 0 0 0 0\n"
          "b | 0 b 0 b b\n"
          "a | 0 0 a a a\n"
          "c | 0 b a a c\n"
          "1 | 0 b a c 1\n");
  }

  TEST_CASE("dot output") {
    const auto two = to_dot(test::lattice_fixture("two_chain.lattice"));
    CHECK(count(two, "->") == 1);
    CHECK(count(two, "rank=same") == 2);
    const auto f1 = to_dot(test::lattice_fixture("two_atoms.lattice"));
    CHECK(count(f1, "->") == 5);
    CHECK(count(f1, "\"b\"; \"a\";") == 1);
    const auto f3 = to_dot(test::lattice_fixture("thirteen.lattice"));
    CHECK(count(f3, "->") == 17);
    CHECK(count(f3, "\"a\" -> \"c\"") == 1);
    CHECK(count(f3, "\"c\" -> \"e\"") == 1);
    CHECK(count(f3, "\"a\" -> \"e\"") == 0);
    CHECK(f3 == to_dot(test::lattice_fixture("thirteen.lattice")));
  }
}

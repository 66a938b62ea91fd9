#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ordsum/decomposition.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/fuzz.hpp"
#include "ordsum/io.hpp"
#include "ordsum/oracle.hpp"
#include "ordsum/ordinal_sum.hpp"

namespace fs = std::filesystem;
using namespace ordsum;

namespace {

enum Exit { kOk = 0, kAxiomFailure = 1, kPrecondition = 2, kParse = 3 };

std::string set_text(const FiniteLattice& l, const ElementSet& s) {
  std::string out = "{";
  for (auto x : s.members()) out += (out.size() > 1 ? ", " : "") + l.label(x);
  return out + "}";
}

int cmd_validate(const std::string& path) {
  const auto l = read_lattice_file(path);
  std::cout << "valid lattice: " << l.size() << " elements, height " << l.height() << ", " << l.covers().size()
            << " covers\n";
  return kOk;
}

struct OrdsumArgs {
  std::string lattice, summands, method = "new", out;
  bool check = false, print = false;
};

int cmd_ordsum(const OrdsumArgs& a) {
  const auto l = read_lattice_file(a.lattice);
  const auto s = read_summands_file(a.summands, l);
  const auto one_summand = [&]() -> const Summand& {
    if (s.size() != 1) throw Error(ErrorKind::ValidationError, "method '" + a.method + "' takes exactly one summand");
    return s[0];
  };

  std::optional<OpTable> t;
  if (a.method == "new") {
    t = os_general(s);
  } else if (a.method == "saminger") {
    t = os_saminger(s);
  } else if (a.method == "one") {
    const auto& x = one_summand();
    t = os_one(l, x.interval.lo(), x.interval.hi(), x.tnorm);
  } else {
    const auto& x = one_summand();
    t = os_ertugrul(l, x.interval.lo(), x.tnorm);
  }

  if (!a.out.empty()) write_text_file(a.out, serialize_optable(*t));
  if (a.print) std::cout << render_cayley(*t);
  if (a.out.empty() && !a.print) std::cout << serialize_optable(*t);
  if (!a.check) return kOk;
  const auto report = check_tnorm(*t);
  std::cout << describe(*t, report);
  return report.is_tnorm() ? kOk : kAxiomFailure;
}

int cmd_decompose(const std::string& path, const std::vector<std::string>& chain_labels) {
  const auto l = read_lattice_file(path);
  std::vector<ElementId> points;
  for (const auto& c : chain_labels) {
    const auto id = l.find(c);
    if (!id) throw Error(ErrorKind::UnknownLabel, "chain label '" + c + "' is not in the lattice");
    points.push_back(*id);
  }
  const auto d = decompose(l, points);
  std::cout << "S1 = " << set_text(l, d.s1) << "\n"
            << "S2 = " << set_text(l, d.s2) << "\n"
            << "A1 = " << set_text(l, d.a1) << "\n";
  for (std::size_t i = 0; i < d.a2.size(); ++i)
    std::cout << "A2[" << i + 1 << "] = " << set_text(l, d.a2[i]) << "\n";
  std::cout << "B1 = " << set_text(l, d.b1) << "\n"
            << "B2 = " << set_text(l, d.b2) << "\n"
            << "B3 = " << set_text(l, d.b3) << "\n";
  return kOk;
}

int cmd_check(const std::string& lattice, const std::string& table, bool oracle) {
  const auto l = read_lattice_file(lattice);
  const auto t = read_optable_file(table, l);
  const auto report = check_tnorm(t);
  std::cout << describe(t, report);
  if (oracle) {
    const auto o = oracle_check(t);
    std::cout << "oracle: " << (same_flags(o, report) ? "agrees" : "DISAGREES") << "\n";
    if (!same_flags(o, report)) return kAxiomFailure;
  }
  return report.is_tnorm() ? kOk : kAxiomFailure;
}

struct FuzzArgs {
  std::uint64_t seed = 1;
  std::size_t samples = 500, max_n = 9, max_summands = 3, max_grid = 20;
  std::string method = "new", dump_dir;
  bool serial = false, no_minimize = false;
};

int cmd_fuzz(const FuzzArgs& a) {
  FuzzConfig cfg;
  cfg.gen.seed = a.seed;
  cfg.gen.sample_count = a.samples;
  cfg.gen.max_elements = a.max_n;
  cfg.gen.max_summands = a.max_summands;
  cfg.max_grid = a.max_grid;
  cfg.exec = a.serial ? Exec::Serial : Exec::Parallel;
  cfg.minimize = !a.no_minimize;
  const auto r = run_fuzz(cfg);
  const auto& st = r.stats;

  std::cout << "samples: " << st.samples << "\n"
            << "construction cases: " << st.construction_cases << "\n"
            << "grid cases: " << st.grid_cases << "\n"
            << "lattice acceptance: " << st.lattice_accepted << "/" << st.lattice_attempts << "\n"
            << "samples with S1 non-empty: " << st.with_s1 << "\n"
            << "saminger non-t-norms: " << st.saminger_failures << "\n"
            << "counterexamples: " << r.failures.size() << "\n";

  if (a.method == "saminger") {
    if (r.saminger_example && !a.dump_dir.empty())
      for (const auto& p : dump_case(a.dump_dir, "saminger", *r.saminger_example))
        std::cout << "wrote " << p.string() << "\n";
    return kOk;
  }
  if (r.failures.empty()) return kOk;
  const fs::path dir = a.dump_dir.empty() ? fs::path("fuzz-failures") : fs::path(a.dump_dir);
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const auto& f = r.failures[i];
    std::cout << "sample " << f.sample << ": " << f.detail << "\n";
    for (const auto& p : dump_case(dir, "failure-" + std::to_string(i + 1), f.reproducer))
      std::cout << "wrote " << p.string() << "\n";
  }
  return kAxiomFailure;
}

int report_error(const Error& e) {
  std::cerr << e.what() << "\n";
  if (const auto* cv = dynamic_cast<const ChainViolationError*>(&e); cv && cv->witness()) {
    const auto& w = *cv->witness();
    std::cerr << "conflict witness: (" << w.x << ", " << w.y << ") -> {";
    for (std::size_t i = 0; i < w.values.size(); ++i) std::cerr << (i ? ", " : "") << w.values[i];
    std::cerr << "}\n";
  }
  return e.kind() == ErrorKind::ParseError ? kParse : kPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal sums of t-norms on finite bounded lattices"};
  app.require_subcommand(1);

  std::string lattice, table;
  auto* validate = app.add_subcommand("validate", "Check that a lattice file describes a bounded lattice");
  validate->add_option("lattice", lattice, "Lattice file")->required();

  OrdsumArgs oa;
  auto* ordsum = app.add_subcommand("ordsum", "Build an ordinal sum and write its table");
  ordsum->add_option("lattice", oa.lattice, "Lattice file")->required();
  ordsum->add_option("summands", oa.summands, "Summand file")->required();
  ordsum->add_option("--method", oa.method, "new | saminger | ertugrul | one")
      ->check(CLI::IsMember({"new", "saminger", "ertugrul", "one"}));
  ordsum->add_option("--out", oa.out, "Write the table to this file instead of standard output");
  ordsum->add_flag("--check", oa.check, "Check the t-norm axioms; exit 1 on a violation");
  ordsum->add_flag("--print", oa.print, "Print an aligned Cayley table");

  std::vector<std::string> chain;
  auto* dec = app.add_subcommand("decompose", "Print the decomposition relative to a chain");
  dec->add_option("lattice", lattice, "Lattice file")->required();
  dec->add_option("--chain", chain, "Chain labels c_0 ... c_n")->required();

  auto* dot = app.add_subcommand("dot", "Emit the Hasse diagram in DOT");
  dot->add_option("lattice", lattice, "Lattice file")->required();

  bool oracle = false;
  auto* check = app.add_subcommand("check", "Check the t-norm axioms of an operation table");
  check->add_option("lattice", lattice, "Lattice file")->required();
  check->add_option("table", table, "Operation table file")->required();
  check->add_flag("--oracle", oracle, "Also run the brute-force checker and compare");

  auto* cayley = app.add_subcommand("cayley", "Print an operation table with headers");
  cayley->add_option("lattice", lattice, "Lattice file")->required();
  cayley->add_option("table", table, "Operation table file")->required();

  FuzzArgs fa;
  auto* fuzz = app.add_subcommand("fuzz", "Random search for counterexamples");
  fuzz->add_option("--seed", fa.seed);
  fuzz->add_option("--samples", fa.samples);
  fuzz->add_option("--max-n", fa.max_n, "Largest lattice size")->check(CLI::Range(2, 26));
  fuzz->add_option("--max-summands", fa.max_summands)->check(CLI::PositiveNumber);
  fuzz->add_option("--max-grid", fa.max_grid, "Largest grid size n for the chain reductions (0 disables)");
  fuzz->add_option("--method", fa.method, "new: fail on counterexamples; saminger: report statistics")
      ->check(CLI::IsMember({"new", "saminger"}));
  fuzz->add_option("--dump-dir", fa.dump_dir, "Where reproducers are written");
  fuzz->add_flag("--serial", fa.serial, "Use the serial kernels");
  fuzz->add_flag("--no-minimize", fa.no_minimize, "Dump reproducers as found");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    if (*validate) return cmd_validate(lattice);
    if (*ordsum) return cmd_ordsum(oa);
    if (*dec) return cmd_decompose(lattice, chain);
    if (*dot) {
      std::cout << to_dot(read_lattice_file(lattice));
      return kOk;
    }
    if (*check) return cmd_check(lattice, table, oracle);
    if (*cayley) {
      const auto l = read_lattice_file(lattice);
      std::cout << render_cayley(read_optable_file(table, l));
      return kOk;
    }
    if (*fuzz) return cmd_fuzz(fa);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

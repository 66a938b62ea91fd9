#include "ordsum/kernels.hpp"

#include "row_scan.hpp"

namespace ordsum::kernels {

namespace {

using Pair = std::array<std::uint32_t, 2>;
using Triple = std::array<std::uint32_t, 3>;

struct Rows {
  const AxiomProblem& p;

  std::uint32_t t(std::size_t x, std::size_t y) const { return p.table[x * p.n + y]; }
  bool leq(std::size_t x, std::size_t y) const { return p.leq[x * p.n + y] != 0; }

  std::optional<Pair> commutativity(std::size_t x) const {
    for (std::size_t y = x + 1; y < p.n; ++y)
      if (t(x, y) != t(y, x)) return Pair{std::uint32_t(x), std::uint32_t(y)};
    return std::nullopt;
  }

  // One-argument form: x <= y implies T(x,z) <= T(y,z).
  std::optional<Triple> increasing(std::size_t x) const {
    for (std::size_t y = 0; y < p.n; ++y) {
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < p.n; ++z)
        if (!leq(t(x, z), t(y, z))) return Triple{std::uint32_t(x), std::uint32_t(y), std::uint32_t(z)};
    }
    return std::nullopt;
  }

  std::optional<Triple> associativity(std::size_t x) const {
    for (std::size_t y = 0; y < p.n; ++y) {
      const std::uint32_t xy = t(x, y);
      for (std::size_t z = 0; z < p.n; ++z)
        if (t(xy, z) != t(x, t(y, z))) return Triple{std::uint32_t(x), std::uint32_t(y), std::uint32_t(z)};
    }
    return std::nullopt;
  }

  std::optional<std::uint32_t> neutrality() const {
    for (std::size_t x = 0; x < p.n; ++x)
      if (t(p.top, x) != x) return std::uint32_t(x);
    return std::nullopt;
  }
};

}  // namespace

std::optional<ClosureViolation> find_closure_violation(const AxiomProblem& p) {
  for (std::size_t i = 0; i < p.n * p.n; ++i)
    if (p.table[i] >= p.n) return ClosureViolation{i / p.n, i % p.n};
  return std::nullopt;
}

namespace serial {

std::optional<Triple> first_nonassociative(const AxiomProblem& p) {
  Rows r{p};
  return detail::first_hit_serial(p.n, [&](std::size_t x) { return r.associativity(x); });
}

AxiomWitnesses check_axioms(const AxiomProblem& p) {
  Rows r{p};
  AxiomWitnesses w;
  w.commutativity = detail::first_hit_serial(p.n, [&](std::size_t x) { return r.commutativity(x); });
  w.increasing = detail::first_hit_serial(p.n, [&](std::size_t x) { return r.increasing(x); });
  w.associativity = first_nonassociative(p);
  w.neutrality = r.neutrality();
  return w;
}

}  // namespace serial

namespace parallel {

std::optional<Triple> first_nonassociative(const AxiomProblem& p) {
  Rows r{p};
  return detail::first_hit_parallel(p.n, [&](std::size_t x) { return r.associativity(x); });
}

AxiomWitnesses check_axioms(const AxiomProblem& p) {
  Rows r{p};
  AxiomWitnesses w;
  w.commutativity = detail::first_hit_parallel(p.n, [&](std::size_t x) { return r.commutativity(x); });
  w.increasing = detail::first_hit_parallel(p.n, [&](std::size_t x) { return r.increasing(x); });
  w.associativity = first_nonassociative(p);
  w.neutrality = r.neutrality();
  return w;
}

}  // namespace parallel

}  // namespace ordsum::kernels

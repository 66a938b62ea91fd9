#include "ordsum/oracle.hpp"

#include "ordsum/errors.hpp"

namespace ordsum {

AxiomReport oracle_check(const OpTable& op) {
  const auto& l = op.lattice();
  const auto& iv = op.carrier();
  const auto xs = iv.carrier();
  const std::size_t n = xs.size();

  // Work on a private copy in carrier positions so nothing is shared with the
  // kernels.
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ElementId v = op.entries()[i * n + j];
      bool found = false;
      for (std::size_t k = 0; k < n && !found; ++k)
        if (xs[k] == v) {
          t[i][j] = k;
          found = true;
        }
      if (!found) throw ClosureError(i, j, "oracle: entry outside the carrier");
    }
  std::size_t top = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (xs[k] == iv.hi()) top = k;
  auto le = [&](std::size_t a, std::size_t b) { return l.leq(xs[a], xs[b]); };

  AxiomReport r;
  for (std::size_t x = 0; x < n && r.commutative; ++x)
    for (std::size_t y = 0; y < n && r.commutative; ++y)
      if (t[x][y] != t[y][x]) {
        r.commutative = false;
        r.commutativity_witness = {xs[x], xs[y]};
      }
  for (std::size_t x = 0; x < n && r.increasing; ++x)
    for (std::size_t y = 0; y < n && r.increasing; ++y)
      for (std::size_t z = 0; z < n && r.increasing; ++z)
        if (le(x, y) && !le(t[x][z], t[y][z])) {
          r.increasing = false;
          r.increasing_witness = {xs[x], xs[y], xs[z]};
        }
  for (std::size_t x = 0; x < n && r.associative; ++x)
    for (std::size_t y = 0; y < n && r.associative; ++y)
      for (std::size_t z = 0; z < n && r.associative; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) {
          r.associative = false;
          r.associativity_witness = {xs[x], xs[y], xs[z]};
        }
  for (std::size_t x = 0; x < n && r.neutral; ++x)
    if (t[top][x] != x) {
      r.neutral = false;
      r.neutrality_witness = xs[x];
    }
  return r;
}

bool same_flags(const AxiomReport& a, const AxiomReport& b) {
  return a.commutative == b.commutative && a.increasing == b.increasing && a.associative == b.associative &&
         a.neutral == b.neutral;
}

}  // namespace ordsum

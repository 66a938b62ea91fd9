#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ordsum/io.hpp"
#include "ordsum/lattice.hpp"
#include "ordsum/tnorm.hpp"

namespace test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(ORDSUM_FIXTURE_DIR) / name;
}

inline ordsum::FiniteLattice lattice_fixture(const std::string& name) {
  return ordsum::read_lattice_file(fixture(name));
}

inline ordsum::ElementId id(const ordsum::FiniteLattice& l, const std::string& label) { return l.at(label); }

/// Greatest lower bound straight from the order relation, for cross-checks.
inline std::vector<ordsum::ElementId> lower_bounds(const ordsum::FiniteLattice& l, ordsum::ElementId x,
                                                   ordsum::ElementId y) {
  std::vector<ordsum::ElementId> out;
  for (auto z : l.elements())
    if (l.leq(z, x) && l.leq(z, y)) out.push_back(z);
  return out;
}

/// Every pair has a unique greatest lower bound and least upper bound, and
/// there is a bottom and a top, checked by scanning the order relation.
inline bool is_bounded_lattice(const ordsum::FiniteLattice& l) {
  const auto xs = l.elements();
  for (auto x : xs) {
    if (!l.leq(l.bottom(), x) || !l.leq(x, l.top())) return false;
    for (auto y : xs) {
      for (const bool lower : {true, false}) {
        std::vector<ordsum::ElementId> bounds;
        for (auto z : xs)
          if (lower ? (l.leq(z, x) && l.leq(z, y)) : (l.leq(x, z) && l.leq(y, z))) bounds.push_back(z);
        std::size_t extremal = 0;
        for (auto b : bounds) {
          bool best = true;
          for (auto c : bounds) best = best && (lower ? l.leq(c, b) : l.leq(b, c));
          extremal += best;
        }
        if (extremal != 1) return false;
      }
    }
  }
  return true;
}

inline std::string table_text(const ordsum::OpTable& t) { return ordsum::serialize_optable(t); }

}  // namespace test

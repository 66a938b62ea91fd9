#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsum/lattice.hpp"
#include "ordsum/summands.hpp"
#include "ordsum/tnorm.hpp"

namespace ordsum {

// Line-based text formats. '#' starts a comment, blank lines are ignored,
// tokens are whitespace separated. Syntax problems, duplicate labels and
// unknown labels raise ParseError with the 1-based line number; semantic
// problems (cycles, missing bounds, non-lattices, bad carriers) raise the
// corresponding library error.
//
//   lattice                  optable                 summands
//   elements: 0 a b 1        carrier: 0 a 1          a 1 drastic
//   covers:                  0 0 0                   0 a c:a
//   0 < a                    0 a a                   a 1 table:t.optable
//   ...                      0 a 1                   b 1 min

FiniteLattice parse_lattice(std::string_view text);
FiniteLattice read_lattice_file(const std::filesystem::path& path);
/// Canonical form: elements in canonical order, covers only.
std::string serialize_lattice(const FiniteLattice& lattice);

/// The carrier line must list an interval of `lattice` in canonical order.
OpTable parse_optable(std::string_view text, const FiniteLattice& lattice, std::string name = "table");
OpTable read_optable_file(const std::filesystem::path& path, const FiniteLattice& lattice);
std::string serialize_optable(const OpTable& op);

/// `table:` paths are resolved against `base_dir`.
SummandList parse_summands(std::string_view text, const FiniteLattice& lattice,
                           const std::filesystem::path& base_dir = {}, bool validate = true);
SummandList read_summands_file(const std::filesystem::path& path, const FiniteLattice& lattice,
                               bool validate = true);
/// `table_refs[i]` is used for summand i when it is not one of the named
/// families; it must then be present.
std::string serialize_summands(const SummandList& summands,
                               const std::vector<std::string>& table_refs = {});

/// "min", "drastic" or "c:<label>" when `op` coincides with that family.
/// Prefers min and drastic over an equal T_c.
std::optional<std::string> family_name(const OpTable& op);

/// Aligned Cayley table with row and column headers in carrier order.
std::string render_cayley(const OpTable& op);

/// Hasse diagram: one node per element, one edge per cover (lower -> upper),
/// same-rank groups.
std::string to_dot(const FiniteLattice& lattice);

/// Writes <stem>.lattice, <stem>.summands and one <stem>.t<i>.optable per
/// summand without a family name. Returns the written paths.
std::vector<std::filesystem::path> dump_case(const std::filesystem::path& dir, const std::string& stem,
                                             const SummandList& summands);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ordsum

#include "ordsum/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    auto raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::size_t last_line(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

void expect_header(const std::vector<Line>& lines, std::string_view text, const std::string& header) {
  if (lines.empty()) throw ParseError(last_line(text), "empty file, expected '" + header + "'");
  if (lines[0].tokens.size() != 1 || lines[0].tokens[0] != header)
    throw ParseError(lines[0].number, "expected header '" + header + "'");
}

/// Labels following `key` on one line, e.g. "elements: 0 a 1".
std::vector<std::string> keyed_labels(const Line& line, const std::string& key) {
  if (line.tokens.empty() || line.tokens[0] != key)
    throw ParseError(line.number, "expected '" + key + "'");
  std::vector<std::string> labels(line.tokens.begin() + 1, line.tokens.end());
  if (labels.empty()) throw ParseError(line.number, "'" + key + "' lists no labels");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw ParseError(line.number, "duplicate label '" + l + "'");
  return labels;
}

ElementId known(const FiniteLattice& lattice, const std::string& label, std::size_t line) {
  auto id = lattice.find(label);
  if (!id) throw ParseError(line, "unknown label '" + label + "'");
  return *id;
}

std::string join_labels(const FiniteLattice& lattice, std::span<const ElementId> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += lattice.label(ids[i]);
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

FiniteLattice parse_lattice(std::string_view text) {
  const auto lines = significant_lines(text);
  expect_header(lines, text, "lattice");
  if (lines.size() < 2) throw ParseError(last_line(text), "missing 'elements:' line");
  const auto labels = keyed_labels(lines[1], "elements:");
  const std::set<std::string> label_set(labels.begin(), labels.end());

  std::vector<LabelPair> covers;
  if (lines.size() > 2) {
    if (lines[2].tokens.size() != 1 || lines[2].tokens[0] != "covers:")
      throw ParseError(lines[2].number, "expected 'covers:'");
    for (std::size_t i = 3; i < lines.size(); ++i) {
      const auto& t = lines[i].tokens;
      if (t.size() != 3 || t[1] != "<") throw ParseError(lines[i].number, "expected '<x> < <y>'");
      for (const auto* l : {&t[0], &t[2]})
        if (!label_set.count(*l)) throw ParseError(lines[i].number, "unknown label '" + *l + "'");
      covers.emplace_back(t[0], t[2]);
    }
  }
  return build_lattice(labels, covers);
}

FiniteLattice read_lattice_file(const std::filesystem::path& path) { return parse_lattice(read_text_file(path)); }

std::string serialize_lattice(const FiniteLattice& lattice) {
  std::string out = "lattice\nelements: ";
  out += join_labels(lattice, lattice.elements());
  out += "\ncovers:\n";
  for (const auto& [lo, hi] : lattice.covers()) out += lattice.label(lo) + " < " + lattice.label(hi) + "\n";
  return out;
}

OpTable parse_optable(std::string_view text, const FiniteLattice& lattice, std::string name) {
  const auto lines = significant_lines(text);
  expect_header(lines, text, "optable");
  if (lines.size() < 2) throw ParseError(last_line(text), "missing 'carrier:' line");
  const auto labels = keyed_labels(lines[1], "carrier:");
  std::vector<ElementId> ids;
  for (const auto& l : labels) ids.push_back(known(lattice, l, lines[1].number));

  ElementId lo = ids[0], hi = ids[0];
  for (auto x : ids) {
    lo = lattice.meet(lo, x);
    hi = lattice.join(hi, x);
  }
  Interval carrier(lattice, lo, hi);
  if (!std::equal(ids.begin(), ids.end(), carrier.carrier().begin(), carrier.carrier().end()))
    throw Error(ErrorKind::CarrierMismatch, "carrier '" + join_labels(lattice, ids) +
                                                "' is not an interval listed in canonical order (expected '" +
                                                join_labels(lattice, carrier.carrier()) + "')");

  const std::size_t n = ids.size();
  if (lines.size() - 2 != n)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " rows, found " +
                                              std::to_string(lines.size() - 2));
  std::vector<ElementId> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& line = lines[r + 2];
    if (line.tokens.size() != n)
      throw ParseError(line.number, "expected " + std::to_string(n) + " entries, found " +
                                        std::to_string(line.tokens.size()));
    for (const auto& tok : line.tokens) entries.push_back(known(lattice, tok, line.number));
  }
  return OpTable(std::move(carrier), std::move(entries), std::move(name));
}

OpTable read_optable_file(const std::filesystem::path& path, const FiniteLattice& lattice) {
  return parse_optable(read_text_file(path), lattice, path.filename().string());
}

std::string serialize_optable(const OpTable& op) {
  const auto& l = op.lattice();
  const std::size_t n = op.size();
  std::string out = "optable\ncarrier: " + join_labels(l, op.carrier().carrier()) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += l.label(op.at_position(i, j));
    }
    out += '\n';
  }
  return out;
}

SummandList parse_summands(std::string_view text, const FiniteLattice& lattice,
                           const std::filesystem::path& base_dir, bool validate) {
  const auto lines = significant_lines(text);
  expect_header(lines, text, "summands");
  std::vector<Summand> summands;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    const auto no = lines[i].number;
    if (t.size() != 3) throw ParseError(no, "expected '<a> <b> <tnorm>'");
    Interval iv(lattice, known(lattice, t[0], no), known(lattice, t[1], no));
    const auto& kind = t[2];
    if (kind == "min") {
      summands.push_back(make_summand(t_min(iv)));
    } else if (kind == "drastic") {
      summands.push_back(make_summand(t_drastic(iv)));
    } else if (kind.starts_with("c:")) {
      summands.push_back(make_summand(t_c(iv, known(lattice, kind.substr(2), no))));
    } else if (kind.starts_with("table:")) {
      const auto path = base_dir / kind.substr(6);
      std::optional<OpTable> op;
      try {
        op = read_optable_file(path, lattice);
      } catch (const ParseError& e) {
        throw ParseError(no, "in '" + path.string() + "': " + e.what());
      }
      if (!(op->carrier() == iv))
        throw Error(ErrorKind::CarrierMismatch, "line " + std::to_string(no) + ": table '" + path.string() +
                                                    "' is not defined on [" + t[0] + ", " + t[1] + "]");
      summands.push_back(make_summand(*op));
    } else {
      throw ParseError(no, "unknown t-norm '" + kind + "' (min, drastic, c:<label>, table:<path>)");
    }
  }
  return SummandList(lattice, std::move(summands), validate);
}

SummandList read_summands_file(const std::filesystem::path& path, const FiniteLattice& lattice, bool validate) {
  return parse_summands(read_text_file(path), lattice, path.parent_path(), validate);
}

std::optional<std::string> family_name(const OpTable& op) {
  const auto& iv = op.carrier();
  if (op == t_min(iv)) return "min";
  if (op == t_drastic(iv)) return "drastic";
  for (auto c : iv.carrier())
    if (op == t_c(iv, c)) return "c:" + op.lattice().label(c);
  return std::nullopt;
}

std::string serialize_summands(const SummandList& summands, const std::vector<std::string>& table_refs) {
  const auto& l = summands.lattice();
  std::string out = "summands\n";
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    std::string kind;
    if (auto name = family_name(s.tnorm)) {
      kind = *name;
    } else {
      if (i >= table_refs.size() || table_refs[i].empty())
        throw std::invalid_argument("summand " + std::to_string(i + 1) + " needs a table reference");
      kind = "table:" + table_refs[i];
    }
    out += l.label(s.interval.lo()) + " " + l.label(s.interval.hi()) + " " + kind + "\n";
  }
  return out;
}

std::string render_cayley(const OpTable& op) {
  const auto& l = op.lattice();
  const auto carrier = op.carrier().carrier();
  std::size_t w = 1;
  for (auto x : carrier) w = std::max(w, l.label(x).size());
  const auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };

  std::string out = std::string(w, ' ') + " |";
  for (auto x : carrier) out += " " + pad(l.label(x));
  out += "\n" + std::string(w + 1, '-') + "+" + std::string(carrier.size() * (w + 1), '-') + "\n";
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    out += pad(l.label(carrier[i])) + " |";
    for (std::size_t j = 0; j < carrier.size(); ++j) out += " " + pad(l.label(op.at_position(i, j)));
    out += "\n";
  }
  return out;
}

std::string to_dot(const FiniteLattice& lattice) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (auto x : lattice.elements()) out += "  " + dot_quote(lattice.label(x)) + ";\n";
  for (const auto& [lo, hi] : lattice.covers())
    out += "  " + dot_quote(lattice.label(lo)) + " -> " + dot_quote(lattice.label(hi)) + ";\n";
  std::map<std::size_t, std::vector<ElementId>> by_rank;
  for (auto x : lattice.elements()) by_rank[lattice.ranks()[x.index]].push_back(x);
  for (const auto& [rank, xs] : by_rank) {
    out += "  { rank=same;";
    for (auto x : xs) out += " " + dot_quote(lattice.label(x)) + ";";
    out += " }\n";
  }
  return out + "}\n";
}

std::vector<std::filesystem::path> dump_case(const std::filesystem::path& dir, const std::string& stem,
                                             const SummandList& summands) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  const auto lattice_path = dir / (stem + ".lattice");
  write_text_file(lattice_path, serialize_lattice(summands.lattice()));
  written.push_back(lattice_path);

  std::vector<std::string> refs(summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (family_name(summands[i].tnorm)) continue;
    refs[i] = stem + ".t" + std::to_string(i + 1) + ".optable";
    write_text_file(dir / refs[i], serialize_optable(summands[i].tnorm));
    written.push_back(dir / refs[i]);
  }
  const auto summands_path = dir / (stem + ".summands");
  write_text_file(summands_path, serialize_summands(summands, refs));
  written.push_back(summands_path);
  return written;
}

}  // namespace ordsum

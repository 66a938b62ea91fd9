#include "ordsum/tnorm.hpp"

#include <limits>
#include <sstream>

#include "ordsum/errors.hpp"
#include "ordsum/kernels.hpp"

namespace ordsum {

OpTable::OpTable(Interval carrier, std::vector<ElementId> entries, std::string name)
    : carrier_(std::move(carrier)), entries_(std::move(entries)), name_(std::move(name)) {
  const std::size_t n = carrier_.size();
  if (entries_.size() != n * n)
    throw Error(ErrorKind::CarrierMismatch, "table '" + name_ + "' has " + std::to_string(entries_.size()) +
                                                " entries, carrier needs " + std::to_string(n * n));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!carrier_.contains(entries_[i])) {
      const auto& l = carrier_.lattice();
      throw ClosureError(i / n, i % n,
                         "T(" + l.label(carrier_.carrier()[i / n]) + ", " + l.label(carrier_.carrier()[i % n]) +
                             ") of '" + name_ + "' escapes the carrier");
    }
  }
}

ElementId OpTable::operator()(ElementId x, ElementId y) const {
  return entries_[carrier_.position(x) * size() + carrier_.position(y)];
}

OpTable OpTable::renamed(std::string name) const {
  OpTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

namespace {

struct PositionView {
  std::vector<std::uint32_t> table;
  std::vector<std::uint8_t> leq;
  std::uint32_t top;
};

PositionView to_positions(const OpTable& op) {
  const auto& c = op.carrier();
  const auto& l = op.lattice();
  const std::size_t n = op.size();
  PositionView v;
  v.table.resize(n * n);
  v.leq.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    v.table[i] = static_cast<std::uint32_t>(c.position(op.entries()[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.leq[i * n + j] = l.leq(c.carrier()[i], c.carrier()[j]);
  v.top = static_cast<std::uint32_t>(c.position(c.hi()));
  return v;
}

}  // namespace

AxiomReport check_tnorm(const OpTable& op, Exec exec) {
  const auto view = to_positions(op);
  kernels::AxiomProblem problem{op.size(), view.table, view.leq, view.top};
  if (auto bad = kernels::find_closure_violation(problem))
    throw ClosureError(bad->row, bad->col, "table escapes its carrier");
  const auto w = exec == Exec::Serial ? kernels::serial::check_axioms(problem)
                                      : kernels::parallel::check_axioms(problem);
  const auto el = [&](std::uint32_t p) { return op.carrier().carrier()[p]; };
  AxiomReport r;
  if (w.commutativity) {
    r.commutative = false;
    r.commutativity_witness = {el((*w.commutativity)[0]), el((*w.commutativity)[1])};
  }
  if (w.increasing) {
    r.increasing = false;
    r.increasing_witness = {el((*w.increasing)[0]), el((*w.increasing)[1]), el((*w.increasing)[2])};
  }
  if (w.associativity) {
    r.associative = false;
    r.associativity_witness = {el((*w.associativity)[0]), el((*w.associativity)[1]),
                               el((*w.associativity)[2])};
  }
  if (w.neutrality) {
    r.neutral = false;
    r.neutrality_witness = el(*w.neutrality);
  }
  return r;
}

bool witnesses_falsify(const OpTable& op, const AxiomReport& r) {
  const auto& l = op.lattice();
  const auto& T = op;
  if (r.commutative != !r.commutativity_witness.has_value()) return false;
  if (r.increasing != !r.increasing_witness.has_value()) return false;
  if (r.associative != !r.associativity_witness.has_value()) return false;
  if (r.neutral != !r.neutrality_witness.has_value()) return false;
  if (auto w = r.commutativity_witness) {
    auto [x, y] = *w;
    if (T(x, y) == T(y, x)) return false;
  }
  if (auto w = r.increasing_witness) {
    auto [x, y, z] = *w;
    if (!l.leq(x, y) || l.leq(T(x, z), T(y, z))) return false;
  }
  if (auto w = r.associativity_witness) {
    auto [x, y, z] = *w;
    if (T(T(x, y), z) == T(x, T(y, z))) return false;
  }
  if (auto w = r.neutrality_witness) {
    if (T(op.carrier().hi(), *w) == *w) return false;
  }
  return true;
}

std::string describe(const OpTable& op, const AxiomReport& r) {
  const auto& l = op.lattice();
  const auto& T = op;
  const auto s = [&](ElementId x) { return l.label(x); };
  std::ostringstream out;
  out << "commutative: ";
  if (auto w = r.commutativity_witness) {
    auto [x, y] = *w;
    out << "NO  witness (" << s(x) << ", " << s(y) << "): T(" << s(x) << "," << s(y) << ")=" << s(T(x, y))
        << " != " << s(T(y, x)) << "=T(" << s(y) << "," << s(x) << ")\n";
  } else {
    out << "yes\n";
  }
  out << "increasing: ";
  if (auto w = r.increasing_witness) {
    auto [x, y, z] = *w;
    out << "NO  witness (" << s(x) << ", " << s(y) << ", " << s(z) << "): " << s(x) << " <= " << s(y)
        << " but T(" << s(x) << "," << s(z) << ")=" << s(T(x, z)) << " !<= " << s(T(y, z)) << "=T(" << s(y)
        << "," << s(z) << ")\n";
  } else {
    out << "yes\n";
  }
  out << "associative: ";
  if (auto w = r.associativity_witness) {
    auto [x, y, z] = *w;
    out << "NO  witness (" << s(x) << ", " << s(y) << ", " << s(z) << "): T(T(" << s(x) << "," << s(y)
        << ")," << s(z) << ")=" << s(T(T(x, y), z)) << " != " << s(T(x, T(y, z))) << "=T(" << s(x) << ",T("
        << s(y) << "," << s(z) << "))\n";
  } else {
    out << "yes\n";
  }
  out << "neutral: ";
  if (auto w = r.neutrality_witness) {
    const auto top = op.carrier().hi();
    out << "NO  witness " << s(*w) << ": T(" << s(top) << "," << s(*w) << ")=" << s(T(top, *w)) << "\n";
  } else {
    out << "yes\n";
  }
  out << "t-norm: " << (r.is_tnorm() ? "yes" : "no") << "\n";
  return out.str();
}

OpTable t_c(const Interval& carrier, ElementId c) {
  if (!carrier.contains(c))
    throw Error(ErrorKind::ForeignElement, "parameter '" + carrier.lattice().label(c) + "' is outside the carrier");
  const auto& l = carrier.lattice();
  const auto top = carrier.hi();
  std::vector<ElementId> entries;
  entries.reserve(carrier.size() * carrier.size());
  for (auto x : carrier.carrier())
    for (auto y : carrier.carrier())
      entries.push_back(x == top || y == top ? l.meet(x, y) : l.meet(l.meet(x, y), c));
  return OpTable(carrier, std::move(entries), "c:" + l.label(c));
}

OpTable t_min(const Interval& carrier) { return t_c(carrier, carrier.hi()).renamed("min"); }
OpTable t_drastic(const Interval& carrier) { return t_c(carrier, carrier.lo()).renamed("drastic"); }

OpTable t_product(const OpTable& first, const OpTable& second, const Interval& product_interval) {
  const auto* f = product_interval.lattice().factors();
  if (f == nullptr || !f->left.same_as(first.lattice()) || !f->right.same_as(second.lattice()))
    throw Error(ErrorKind::CarrierMismatch, "interval does not live in the product of the operands' lattices");
  if (product_interval.lo() != f->pair(first.carrier().lo(), second.carrier().lo()) ||
      product_interval.hi() != f->pair(first.carrier().hi(), second.carrier().hi()))
    throw Error(ErrorKind::CarrierMismatch, "interval is not the product of the operand carriers");
  std::vector<ElementId> entries;
  entries.reserve(product_interval.size() * product_interval.size());
  for (auto x : product_interval.carrier())
    for (auto y : product_interval.carrier())
      entries.push_back(f->pair(first(f->first(x), f->first(y)), second(f->second(x), f->second(y))));
  return OpTable(product_interval, std::move(entries), first.name() + "x" + second.name());
}

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

class TnormSearch {
public:
  explicit TnormSearch(const Interval& carrier) : carrier_(carrier), n_(carrier.size()) {
    const auto& l = carrier.lattice();
    leq_.resize(n_ * n_);
    meet_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const auto x = carrier.carrier()[i], y = carrier.carrier()[j];
        leq_[i * n_ + j] = l.leq(x, y);
        meet_[i * n_ + j] = static_cast<std::uint32_t>(carrier.position(l.meet(x, y)));
      }
    top_ = static_cast<std::uint32_t>(carrier.position(carrier.hi()));
    bottom_ = static_cast<std::uint32_t>(carrier.position(carrier.lo()));
    table_.assign(n_ * n_, kUnset);
    for (std::uint32_t x = 0; x < n_; ++x) {
      set(top_, x, x);
      set(bottom_, x, bottom_);
    }
    // Upper triangle of the interior, row-major.
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i; j < n_; ++j)
        if (i != top_ && i != bottom_ && j != top_ && j != bottom_) cells_.push_back({i, j});
  }

  std::vector<OpTable> run() {
    search(0);
    return std::move(found_);
  }

private:
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t v) {
    table_[i * n_ + j] = v;
    table_[j * n_ + i] = v;
  }
  std::uint32_t get(std::uint32_t i, std::uint32_t j) const { return table_[i * n_ + j]; }
  bool leq(std::uint32_t i, std::uint32_t j) const { return leq_[i * n_ + j] != 0; }

  // Monotonicity against already-assigned cells in the same column.
  bool monotone_at(std::uint32_t i, std::uint32_t j) const {
    const std::uint32_t v = get(i, j);
    for (std::uint32_t k = 0; k < n_; ++k) {
      const std::uint32_t w = get(k, j);
      if (w == kUnset) continue;
      if (leq(k, i) && !leq(w, v)) return false;
      if (leq(i, k) && !leq(v, w)) return false;
    }
    return true;
  }

  bool partially_associative() const {
    for (std::uint32_t x = 0; x < n_; ++x)
      for (std::uint32_t y = 0; y < n_; ++y) {
        const std::uint32_t xy = get(x, y);
        if (xy == kUnset) continue;
        for (std::uint32_t z = 0; z < n_; ++z) {
          const std::uint32_t yz = get(y, z);
          if (yz == kUnset) continue;
          const std::uint32_t lhs = get(xy, z), rhs = get(x, yz);
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    return true;
  }

  void search(std::size_t k) {
    if (k == cells_.size()) {
      std::vector<ElementId> entries(n_ * n_);
      for (std::size_t i = 0; i < n_ * n_; ++i) entries[i] = carrier_.carrier()[table_[i]];
      OpTable op(carrier_, std::move(entries), "enum#" + std::to_string(found_.size()));
      if (check_tnorm(op, Exec::Serial).is_tnorm()) found_.push_back(std::move(op));
      return;
    }
    const auto [i, j] = cells_[k];
    const std::uint32_t bound = meet_[i * n_ + j];
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (!leq(v, bound)) continue;
      set(i, j, v);
      if (monotone_at(i, j) && monotone_at(j, i) && partially_associative()) search(k + 1);
    }
    set(i, j, kUnset);
  }

  const Interval& carrier_;
  std::size_t n_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::uint32_t top_, bottom_;
  std::vector<std::uint32_t> table_;
  std::vector<std::array<std::uint32_t, 2>> cells_;
  std::vector<OpTable> found_;
};

}  // namespace

std::vector<OpTable> enumerate_tnorms(const Interval& carrier, std::size_t cap) {
  if (carrier.size() > cap)
    throw Error(ErrorKind::SizeLimit, "carrier has " + std::to_string(carrier.size()) +
                                          " elements; enumeration is capped at " + std::to_string(cap));
  return TnormSearch(carrier).run();
}

bool pointwise_leq(const OpTable& lhs, const OpTable& rhs) {
  if (!(lhs.carrier() == rhs.carrier())) throw Error(ErrorKind::CarrierMismatch, "tables live on different carriers");
  const auto& l = lhs.lattice();
  for (std::size_t i = 0; i < lhs.entries().size(); ++i)
    if (!l.leq(lhs.entries()[i], rhs.entries()[i])) return false;
  return true;
}

}  // namespace ordsum

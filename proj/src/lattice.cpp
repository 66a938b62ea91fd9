#include "ordsum/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "ordsum/errors.hpp"

namespace ordsum {

namespace detail {

struct LatticeData {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint8_t> leq;
  std::vector<ElementId> meet, join;
  ElementId bottom, top;
  std::vector<Cover> covers;
  std::vector<std::size_t> ranks;
  std::optional<ProductFactors> factors;
};

}  // namespace detail

FiniteLattice make_lattice(std::shared_ptr<const detail::LatticeData> data) {
  FiniteLattice l;
  l.data_ = std::move(data);
  return l;
}

namespace {

using Row = std::vector<std::uint64_t>;

struct BitMatrix {
  std::size_t n, words;
  std::vector<std::uint64_t> bits;

  explicit BitMatrix(std::size_t size) : n(size), words((size + 63) / 64), bits(n * words, 0) {}
  bool get(std::size_t i, std::size_t j) const { return (bits[i * words + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64); }
  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
  std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }

  // Warshall on bit rows.
  void close_transitively() {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t* rk = row(k);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != k && get(i, k)) {
          std::uint64_t* ri = row(i);
          for (std::size_t w = 0; w < words; ++w) ri[w] |= rk[w];
        }
      }
    }
  }
};

bool subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

void check_labels(const std::vector<std::string>& labels,
                  std::unordered_map<std::string, std::uint32_t>& index) {
  if (labels.empty()) throw Error(ErrorKind::NotALattice, "a lattice needs at least one element");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw Error(ErrorKind::DuplicateLabel, "empty label at position " + std::to_string(i));
    if (!index.emplace(labels[i], static_cast<std::uint32_t>(i)).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' declared twice");
  }
}

// Picks the greatest element of `bounds` under `below` (down-sets) or reports
// that none exists.
std::optional<std::uint32_t> greatest_of(const std::uint64_t* bounds, const BitMatrix& below,
                                         std::size_t n) {
  for (std::size_t m = 0; m < n; ++m) {
    if (!((bounds[m / 64] >> (m % 64)) & 1u)) continue;
    if (subset(bounds, below.row(m), below.words)) return static_cast<std::uint32_t>(m);
  }
  return std::nullopt;
}

std::shared_ptr<detail::LatticeData> finish(std::vector<std::string> labels,
                                            std::unordered_map<std::string, std::uint32_t> index,
                                            BitMatrix up) {
  const std::size_t n = labels.size();
  // up.get(i, j) <=> i <= j; reflexive and transitive on entry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up.get(i, j) && up.get(j, i))
        throw Error(ErrorKind::CycleDetected, "'" + labels[i] + "' and '" + labels[j] +
                                                  "' lie on a cycle of the cover relation");

  BitMatrix down(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (up.get(i, j)) down.set(j, i);

  std::optional<std::uint32_t> bottom, top;
  for (std::size_t i = 0; i < n && (!bottom || !top); ++i) {
    bool is_bottom = true, is_top = true;
    for (std::size_t j = 0; j < n; ++j) {
      is_bottom = is_bottom && up.get(i, j);
      is_top = is_top && up.get(j, i);
    }
    if (is_bottom) bottom = static_cast<std::uint32_t>(i);
    if (is_top) top = static_cast<std::uint32_t>(i);
  }
  if (!bottom) throw Error(ErrorKind::NoBounds, "no global bottom element");
  if (!top) throw Error(ErrorKind::NoBounds, "no global top element");

  auto data = std::make_shared<detail::LatticeData>();
  data->n = n;
  data->meet.resize(n * n);
  data->join.resize(n * n);

  Row scratch(up.words);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      for (std::size_t w = 0; w < up.words; ++w) scratch[w] = down.row(x)[w] & down.row(y)[w];
      auto m = greatest_of(scratch.data(), down, n);
      if (!m) throw NotALatticeError(labels[x], labels[y], "no greatest lower bound");
      for (std::size_t w = 0; w < up.words; ++w) scratch[w] = up.row(x)[w] & up.row(y)[w];
      auto j = greatest_of(scratch.data(), up, n);  // least upper bound: greatest under >=
      if (!j) throw NotALatticeError(labels[x], labels[y], "no least upper bound");
      data->meet[x * n + y] = data->meet[y * n + x] = ElementId{*m};
      data->join[x * n + y] = data->join[y * n + x] = ElementId{*j};
    }
  }

  data->leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data->leq[i * n + j] = up.get(i, j) ? 1 : 0;

  // x covers-below y iff x < y with nothing strictly between.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !up.get(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (z != x && z != y && up.get(x, z) && up.get(z, y)) cover = false;
      if (cover)
        data->covers.emplace_back(ElementId{static_cast<std::uint32_t>(x)},
                                  ElementId{static_cast<std::uint32_t>(y)});
    }
  }

  // Longest-chain rank: process in order of down-set size (a linear extension).
  std::vector<std::size_t> order(n), downsize(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
    for (std::size_t j = 0; j < n; ++j) downsize[i] += down.get(i, j) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return downsize[a] < downsize[b]; });
  data->ranks.assign(n, 0);
  for (std::size_t i : order)
    for (const auto& [lo, hi] : data->covers)
      if (hi.index == i) data->ranks[i] = std::max(data->ranks[i], data->ranks[lo.index] + 1);

  data->labels = std::move(labels);
  data->index = std::move(index);
  data->bottom = ElementId{*bottom};
  data->top = ElementId{*top};
  return data;
}

}  // namespace

std::size_t FiniteLattice::size() const noexcept { return data_ ? data_->n : 0; }

std::vector<ElementId> FiniteLattice::elements() const {
  std::vector<ElementId> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ElementId{static_cast<std::uint32_t>(i)};
  return out;
}

void FiniteLattice::check(ElementId x) const {
  if (!data_ || x.index >= data_->n)
    throw Error(ErrorKind::ForeignElement, "element #" + std::to_string(x.index) + " is not in the lattice");
}

const std::string& FiniteLattice::label(ElementId x) const {
  check(x);
  return data_->labels[x.index];
}

std::span<const std::string> FiniteLattice::labels() const noexcept {
  if (!data_) return {};
  return data_->labels;
}

std::optional<ElementId> FiniteLattice::find(std::string_view label) const {
  if (!data_) return std::nullopt;
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return ElementId{it->second};
}

ElementId FiniteLattice::at(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorKind::ForeignElement, "no element labelled '" + std::string(label) + "'");
}

bool FiniteLattice::leq(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return data_->leq[x.index * data_->n + y.index] != 0;
}

ElementId FiniteLattice::meet(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return data_->meet[x.index * data_->n + y.index];
}

ElementId FiniteLattice::join(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return data_->join[x.index * data_->n + y.index];
}

ElementId FiniteLattice::bottom() const noexcept { return data_->bottom; }
ElementId FiniteLattice::top() const noexcept { return data_->top; }

std::vector<ElementId> FiniteLattice::incomparables(ElementId a) const {
  check(a);
  std::vector<ElementId> out;
  for (auto x : elements())
    if (!comparable(x, a)) out.push_back(x);
  return out;
}

const std::vector<Cover>& FiniteLattice::covers() const noexcept { return data_->covers; }
const std::vector<std::size_t>& FiniteLattice::ranks() const noexcept { return data_->ranks; }
std::size_t FiniteLattice::height() const noexcept { return data_->ranks[data_->top.index]; }

const ProductFactors* FiniteLattice::factors() const noexcept {
  return data_ && data_->factors ? &*data_->factors : nullptr;
}

std::span<const std::uint8_t> FiniteLattice::order_matrix() const noexcept {
  if (!data_) return {};
  return data_->leq;
}

FiniteLattice build_lattice(const std::vector<std::string>& labels,
                            const std::vector<LabelPair>& covers) {
  std::unordered_map<std::string, std::uint32_t> index;
  check_labels(labels, index);
  const std::size_t n = labels.size();
  BitMatrix up(n);
  for (std::size_t i = 0; i < n; ++i) up.set(i, i);
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end()) throw Error(ErrorKind::UnknownLabel, "cover references undeclared '" + lo + "'");
    if (b == index.end()) throw Error(ErrorKind::UnknownLabel, "cover references undeclared '" + hi + "'");
    if (a->second == b->second)
      throw Error(ErrorKind::CycleDetected, "'" + lo + "' is declared strictly below itself");
    up.set(a->second, b->second);
  }
  up.close_transitively();
  return make_lattice(finish(labels, std::move(index), std::move(up)));
}

FiniteLattice build_lattice_from_order(const std::vector<std::string>& labels,
                                       const std::vector<std::uint8_t>& leq) {
  std::unordered_map<std::string, std::uint32_t> index;
  check_labels(labels, index);
  const std::size_t n = labels.size();
  if (leq.size() != n * n) throw Error(ErrorKind::CarrierMismatch, "order matrix has the wrong size");
  BitMatrix up(n);
  for (std::size_t i = 0; i < n; ++i) {
    up.set(i, i);
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i * n + j]) up.set(i, j);
  }
  up.close_transitively();
  return make_lattice(finish(labels, std::move(index), std::move(up)));
}

FiniteLattice induced_sublattice(const FiniteLattice& lattice, std::span<const ElementId> keep) {
  std::vector<ElementId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(lattice.label(sorted[i]));
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = lattice.leq(sorted[i], sorted[j]) ? 1 : 0;
  }
  return build_lattice_from_order(labels, leq);
}

FiniteLattice product(const FiniteLattice& left, const FiniteLattice& right, std::size_t size_cap) {
  const std::size_t n1 = left.size(), n2 = right.size();
  if (n1 == 0 || n2 == 0) throw Error(ErrorKind::ForeignElement, "product of an unbuilt lattice");
  if (n1 * n2 > size_cap)
    throw Error(ErrorKind::SizeLimit, "product has " + std::to_string(n1 * n2) +
                                          " elements, cap is " + std::to_string(size_cap));
  const std::size_t n = n1 * n2;
  auto data = std::make_shared<detail::LatticeData>();
  data->n = n;
  ProductFactors f{left, right};
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      std::string label = "(" + left.labels()[i] + "," + right.labels()[j] + ")";
      data->index.emplace(label, static_cast<std::uint32_t>(data->labels.size()));
      data->labels.push_back(std::move(label));
    }
  if (data->index.size() != n) throw Error(ErrorKind::DuplicateLabel, "product labels collide");

  data->leq.assign(n * n, 0);
  data->meet.resize(n * n);
  data->join.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const ElementId xi{static_cast<std::uint32_t>(x)};
    const ElementId x1 = f.first(xi), x2 = f.second(xi);
    for (std::size_t y = 0; y < n; ++y) {
      const ElementId yi{static_cast<std::uint32_t>(y)};
      const ElementId y1 = f.first(yi), y2 = f.second(yi);
      data->leq[x * n + y] = left.leq(x1, y1) && right.leq(x2, y2);
      data->meet[x * n + y] = f.pair(left.meet(x1, y1), right.meet(x2, y2));
      data->join[x * n + y] = f.pair(left.join(x1, y1), right.join(x2, y2));
    }
  }
  // (u,v) is covered by (u',v) for u covered by u', and by (u,v') likewise.
  for (std::size_t x = 0; x < n; ++x) {
    const ElementId xi{static_cast<std::uint32_t>(x)};
    for (const auto& [lo, hi] : left.covers())
      if (lo == f.first(xi)) data->covers.emplace_back(xi, f.pair(hi, f.second(xi)));
    for (const auto& [lo, hi] : right.covers())
      if (lo == f.second(xi)) data->covers.emplace_back(xi, f.pair(f.first(xi), hi));
  }
  std::sort(data->covers.begin(), data->covers.end());
  data->ranks.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const ElementId xi{static_cast<std::uint32_t>(x)};
    data->ranks[x] = left.ranks()[f.first(xi).index] + right.ranks()[f.second(xi).index];
  }
  data->bottom = f.pair(left.bottom(), right.bottom());
  data->top = f.pair(left.top(), right.top());
  data->factors = std::move(f);
  return make_lattice(std::move(data));
}

std::string grid_label(std::size_t k, std::size_t grid_size) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(k) / static_cast<double>(grid_size));
  return buf;
}

FiniteLattice grid_chain(std::size_t grid_size) {
  if (grid_size == 0) throw Error(ErrorKind::GridMismatch, "grid size must be positive");
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (std::size_t k = 0; k <= grid_size; ++k) {
    labels.push_back(grid_label(k, grid_size));
    if (k > 0) covers.emplace_back(labels[k - 1], labels[k]);
  }
  return build_lattice(labels, covers);
}

Interval::Interval(FiniteLattice lattice, ElementId lo, ElementId hi)
    : lattice_(std::move(lattice)), lo_(lo), hi_(hi) {
  if (!lattice_.leq(lo, hi))
    throw Error(ErrorKind::NotComparable, "interval bounds '" + lattice_.label(lo) + "' and '" +
                                              lattice_.label(hi) + "' are not ordered");
  position_.assign(lattice_.size(), -1);
  for (auto x : lattice_.elements()) {
    if (lattice_.leq(lo, x) && lattice_.leq(x, hi)) {
      position_[x.index] = static_cast<std::int32_t>(carrier_.size());
      carrier_.push_back(x);
    }
  }
}

std::size_t Interval::position(ElementId x) const {
  if (!contains(x))
    throw Error(ErrorKind::ForeignElement,
                "element #" + std::to_string(x.index) + " is outside [" + lattice_.label(lo_) +
                    ", " + lattice_.label(hi_) + "]");
  return static_cast<std::size_t>(position_[x.index]);
}

std::optional<std::size_t> Interval::find_position(ElementId x) const noexcept {
  if (!contains(x)) return std::nullopt;
  return static_cast<std::size_t>(position_[x.index]);
}

Interval interval(const FiniteLattice& lattice, ElementId lo, ElementId hi) {
  return Interval(lattice, lo, hi);
}

}  // namespace ordsum

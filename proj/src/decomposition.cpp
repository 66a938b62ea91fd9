#include "ordsum/decomposition.hpp"

#include "ordsum/errors.hpp"

namespace ordsum {

ChainSpec::ChainSpec(FiniteLattice lattice, std::vector<ElementId> points)
    : lattice_(std::move(lattice)), points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorKind::NotAChain, "a chain needs at least one point");
  for (auto p : points_)
    if (!lattice_.contains(p)) throw Error(ErrorKind::ForeignElement, "chain point outside the lattice");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!lattice_.leq(points_[i - 1], points_[i]))
      throw Error(ErrorKind::NotAChain, "c_" + std::to_string(i - 1) + " = '" + lattice_.label(points_[i - 1]) +
                                            "' is not below c_" + std::to_string(i) + " = '" +
                                            lattice_.label(points_[i]) + "' (index " + std::to_string(i) + ")");
}

ElementId ChainSpec::point(long long i) const {
  if (i <= 0) return points_.front();
  if (static_cast<std::size_t>(i) >= points_.size()) return points_.back();
  return points_[static_cast<std::size_t>(i)];
}

std::vector<ElementId> ElementSet::members() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(ElementId{static_cast<std::uint32_t>(i)});
  return out;
}

std::size_t ElementSet::size() const {
  std::size_t k = 0;
  for (auto m : mask_) k += m;
  return k;
}

std::size_t Decomposition::a2_index(ElementId x) const {
  for (std::size_t i = 0; i < a2.size(); ++i)
    if (a2[i].contains(x)) return i + 1;
  return 0;
}

Decomposition decompose(const ChainSpec& chain) {
  const auto& l = chain.lattice();
  const std::size_t n = l.size();
  const std::size_t k = chain.interval_count();
  const auto c = [&](long long i) { return chain.point(i); };
  const auto top = l.top(), bottom = l.bottom();

  Decomposition d{chain, ElementSet(n), ElementSet(n), ElementSet(n), {}, ElementSet(n), ElementSet(n),
                  ElementSet(n), chain.chain_meet()};
  d.a2.assign(k, ElementSet(n));

  for (auto x : l.elements()) {
    bool in_s1 = false;
    for (long long i = 0; i <= static_cast<long long>(k); ++i) in_s1 = in_s1 || !l.comparable(x, c(i));
    (in_s1 ? d.s1 : d.s2).insert(x);

    // inf{i : x in I_{c_i}} = -infinity iff x is incomparable with the
    // constant left tail c_0.
    if (!l.comparable(x, c(0))) d.a1.insert(x);
    for (std::size_t i = 1; i <= k; ++i)
      if (in_open(l, x, c(static_cast<long long>(i) - 1), top) && !l.comparable(x, c(static_cast<long long>(i))))
        d.a2[i - 1].insert(x);

    if (!in_s1) {
      if (in_closed(l, x, c(static_cast<long long>(k)), top)) d.b1.insert(x);
      if (in_closed(l, x, bottom, c(0))) d.b2.insert(x);
    }
    // Padded segments [c_{-1}, c_0] and [c_n, c_{n+1}] are the end points.
    for (long long i = 0; i <= static_cast<long long>(k) + 1; ++i)
      if (in_closed(l, x, c(i - 1), c(i))) d.b3.insert(x);
  }
  return d;
}

std::string to_string(const RegionTag& tag) {
  switch (tag.kind) {
    case RegionTag::Kind::Square: return "Square(" + std::to_string(tag.index) + ")";
    case RegionTag::Kind::Delta2: return "Delta2(" + std::to_string(tag.index) + ")";
    case RegionTag::Kind::Delta1: return "Delta1";
    case RegionTag::Kind::Fallback: return "Fallback";
  }
  return "?";
}

namespace {

template <class Sink>
void scan_regions(const Decomposition& dec, ElementId x, ElementId y, Sink&& sink) {
  const auto& l = dec.chain.lattice();
  if (!l.contains(x) || !l.contains(y)) throw Error(ErrorKind::ForeignElement, "pair outside the lattice");
  const auto top = l.top();
  const std::size_t k = dec.chain.interval_count();
  const auto c = [&](std::size_t i) { return dec.chain.point(static_cast<long long>(i)); };

  for (std::size_t i = 1; i <= k; ++i)
    if (in_closed(l, x, c(i - 1), c(i)) && in_closed(l, y, c(i - 1), c(i)))
      if (sink(RegionTag::square(i))) return;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto& a2 = dec.a2[i - 1];
    if ((a2.contains(x) && in_right_open(l, y, c(i - 1), top)) ||
        (a2.contains(y) && in_right_open(l, x, c(i - 1), top)))
      if (sink(RegionTag::delta2(i))) return;
  }
  if ((dec.a1.contains(x) && y != top) || (dec.a1.contains(y) && x != top))
    if (sink(RegionTag::delta1())) return;
}

}  // namespace

RegionTag classify_pair(const Decomposition& dec, ElementId x, ElementId y) {
  RegionTag found = RegionTag::fallback();
  scan_regions(dec, x, y, [&](RegionTag t) {
    found = t;
    return true;
  });
  return found;
}

std::vector<RegionTag> regions_containing(const Decomposition& dec, ElementId x, ElementId y) {
  std::vector<RegionTag> out;
  scan_regions(dec, x, y, [&](RegionTag t) {
    out.push_back(t);
    return false;
  });
  if (out.empty()) out.push_back(RegionTag::fallback());
  return out;
}

std::pair<ChainSpec, std::vector<OpTable>> interleave_chain(const SummandList& summands) {
  const auto& l = summands.lattice();
  const auto& s = summands.summands();
  if (s.empty()) throw Error(ErrorKind::NotAChain, "no summands to interleave");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const auto b = s[i].interval.hi(), a = s[i + 1].interval.lo();
    if (!l.leq(b, a))
      throw ChainViolationError(i + 1, std::nullopt,
                                "b_" + std::to_string(i + 1) + " = '" + l.label(b) + "' is not below a_" +
                                    std::to_string(i + 2) + " = '" + l.label(a) + "'");
  }
  std::vector<ElementId> points;
  std::vector<OpTable> tnorms;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) tnorms.push_back(t_min(Interval(l, s[i - 1].interval.hi(), s[i].interval.lo())));
    points.push_back(s[i].interval.lo());
    points.push_back(s[i].interval.hi());
    tnorms.push_back(s[i].tnorm);
  }
  return {ChainSpec(l, std::move(points)), std::move(tnorms)};
}

}  // namespace ordsum

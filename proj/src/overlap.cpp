#include "osd/overlap.hpp"

#include "osd/error.hpp"

#include <algorithm>
#include <deque>

namespace osd {

namespace {

FieldElement reduced(const FieldElement& e) { return FieldElement(e.context(), e.canonical_key()); }

const FieldElement& min_of(const FieldElement& a, const FieldElement& b) { return field_sign(a - b) <= 0 ? a : b; }
const FieldElement& max_of(const FieldElement& a, const FieldElement& b) { return field_sign(a - b) >= 0 ? a : b; }

// Overlaps between two tile rows starting at top0 and bottom0.
std::vector<Overlap> sweep(const Word& top, FieldElement top0, const Word& bottom, FieldElement bottom0,
                           const std::vector<FieldElement>& lengths) {
  std::vector<Overlap> out;
  std::size_t i = 0, j = 0;
  FieldElement ts = std::move(top0), bs = std::move(bottom0);
  while (i < top.size() && j < bottom.size()) {
    const FieldElement te = ts + lengths[top[i]];
    const FieldElement be = bs + lengths[bottom[j]];
    const FieldElement support = min_of(te, be) - max_of(ts, bs);
    if (field_sign(support) > 0)
      out.push_back(Overlap{top[i], bottom[j], reduced(bs - ts), reduced(support)});
    const int s = field_sign(te - be);
    if (s <= 0) {
      ts = te;
      ++i;
    }
    if (s >= 0) {
      bs = be;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool Overlap::is_coincidence() const { return top_letter == bottom_letter && field_is_zero(offset); }

std::vector<Overlap> decompose_overlaps(const BalancedPair& p, const std::vector<FieldElement>& lengths) {
  const FieldElement zero = FieldElement::constant(lengths.front().context(), Rational(0));
  return sweep(p.top, zero, p.bottom, zero, lengths);
}

Overlap canonical_overlap(const Overlap& o) {
  const bool flip = o.bottom_letter < o.top_letter || (o.top_letter == o.bottom_letter && field_sign(o.offset) < 0);
  if (!flip) return o;
  return Overlap{o.bottom_letter, o.top_letter, -o.offset, o.support_length};
}

std::vector<Overlap> inflate_overlap(const Overlap& o, const SubstitutionRule& rule,
                                     const std::vector<FieldElement>& lengths) {
  const auto& ctx = lengths.front().context();
  const FieldElement zero = FieldElement::constant(ctx, Rational(0));
  const FieldElement shift = reduced(FieldElement::generator(ctx) * o.offset);
  return sweep(rule.image(o.top_letter), zero, rule.image(o.bottom_letter), shift, lengths);
}

bool operator<(const OverlapKey& a, const OverlapKey& b) {
  if (a.top_letter != b.top_letter) return a.top_letter < b.top_letter;
  if (a.bottom_letter != b.bottom_letter) return a.bottom_letter < b.bottom_letter;
  return a.offset < b.offset;
}

OverlapKey overlap_key(const Overlap& c) { return OverlapKey{c.top_letter, c.bottom_letter, c.offset.canonical_key()}; }

OverlapGraph build_overlap_closure(const PairGraph& pg, const SubstitutionRule& rule,
                                   const std::vector<FieldElement>& lengths, std::size_t cap) {
  OverlapGraph g;
  auto add = [&](const Overlap& raw) {
    Overlap c = canonical_overlap(raw);
    auto [it, fresh] = g.index.emplace(overlap_key(c), g.nodes.size());
    if (fresh) {
      g.coincidence.push_back(c.is_coincidence());
      g.nodes.push_back(std::move(c));
      if (g.nodes.size() > cap)
        throw CapExceeded(g.nodes.size(), "overlap closure exceeded " + std::to_string(cap) + " nodes");
    }
    return it->second;
  };
  const FieldElement zero = FieldElement::constant(lengths.front().context(), Rational(0));
  for (Letter l = 0; l < rule.size(); ++l) add(Overlap{l, l, zero, lengths[l]});
  for (std::size_t v = 0; v < pg.size(); ++v)
    if (!pg.coincidence[v])
      for (const auto& o : decompose_overlaps(pg.nodes[v], lengths)) add(o);
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const Overlap o = g.nodes[k];
    std::vector<std::pair<std::size_t, std::size_t>> kids;
    for (const auto& child : inflate_overlap(o, rule, lengths)) {
      const std::size_t idx = add(child);
      auto it = std::find_if(kids.begin(), kids.end(), [&](const auto& e) { return e.first == idx; });
      if (it == kids.end())
        kids.emplace_back(idx, 1);
      else
        ++it->second;
    }
    g.children.push_back(std::move(kids));
  }
  return g;
}

bool overlap_pure_point(const OverlapGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto [i, mult] : g.children[j]) parents[i].push_back(j);
  std::vector<bool> seen(g.coincidence.begin(), g.coincidence.end());
  std::deque<std::size_t> work;
  for (std::size_t v = 0; v < n; ++v)
    if (seen[v]) work.push_back(v);
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop_front();
    for (std::size_t p : parents[v])
      if (!seen[p]) {
        seen[p] = true;
        work.push_back(p);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

DiscrepancyGraph overlap_discrepancy_graph(const OverlapGraph& g) {
  DiscrepancyGraph dc;
  std::vector<std::size_t> pos(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!g.coincidence[v]) {
      pos[v] = dc.nodes.size();
      dc.nodes.push_back(v);
    }
  dc.matrix = IntMatrix(dc.nodes.size(), dc.nodes.size());
  for (std::size_t col = 0; col < dc.nodes.size(); ++col)
    for (auto [child, mult] : g.children[dc.nodes[col]])
      if (!g.coincidence[child]) dc.matrix(pos[child], col) += static_cast<unsigned long>(mult);
  return dc;
}

}  // namespace osd

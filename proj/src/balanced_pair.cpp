#include "osd/balanced_pair.hpp"

#include "osd/error.hpp"

#include <deque>
#include <stdexcept>

namespace osd {

BalancedPair BalancedPair::canonical(Word a, Word b) {
  if (b < a) std::swap(a, b);
  return BalancedPair{std::move(a), std::move(b)};
}

std::vector<BalancedPair> split(const Word& top, const Word& bottom, const std::vector<FieldElement>& lengths) {
  std::vector<BalancedPair> out;
  if (top == bottom) {
    for (Letter l : top) out.push_back(BalancedPair{{l}, {l}});
    return out;
  }
  if (top.empty() || bottom.empty()) throw UnbalancedInput("split: empty word in a non-trivial pair");
  // Merge the two vertex sequences; cut wherever the right ends coincide.
  std::size_t i = 0, j = 0, si = 0, sj = 0;
  FieldElement a = lengths[top[0]];
  FieldElement b = lengths[bottom[0]];
  while (true) {
    const int s = field_sign(a - b);
    if (s == 0) {
      out.push_back(BalancedPair::canonical(Word(top.begin() + si, top.begin() + i + 1),
                                            Word(bottom.begin() + sj, bottom.begin() + j + 1)));
      ++i;
      ++j;
      si = i;
      sj = j;
      if (i == top.size() || j == bottom.size()) break;
      a += lengths[top[i]];
      b += lengths[bottom[j]];
    } else if (s < 0) {
      if (++i == top.size()) break;
      a += lengths[top[i]];
    } else {
      if (++j == bottom.size()) break;
      b += lengths[bottom[j]];
    }
  }
  if (i != top.size() || j != bottom.size()) throw UnbalancedInput("split: words have different total lengths");
  return out;
}

std::vector<std::pair<BalancedPair, std::size_t>> substitute_pair(const BalancedPair& p, const SubstitutionRule& rule,
                                                                  const std::vector<FieldElement>& lengths) {
  std::vector<std::pair<BalancedPair, std::size_t>> out;
  std::map<BalancedPair, std::size_t> pos;
  for (auto& piece : split(rule.apply(p.top), rule.apply(p.bottom), lengths)) {
    auto [it, fresh] = pos.emplace(piece, out.size());
    if (fresh)
      out.emplace_back(std::move(piece), 1);
    else
      ++out[it->second].second;
  }
  return out;
}

std::set<BalancedPair> default_seeds(const SubstitutionRule& rule, const std::vector<FieldElement>& lengths,
                                     std::size_t seed_factor_length) {
  if (seed_factor_length < 2) throw std::invalid_argument("seed factor length must be at least 2");
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<Word>> classes;
  for (const Word& w : language_factors(rule, seed_factor_length)) {
    if (w.size() < 2) continue;
    std::vector<std::size_t> ab(rule.size(), 0);
    for (Letter l : w) ++ab[l];
    classes[{w.size(), ab}].push_back(w);
  }
  std::set<BalancedPair> seeds;
  for (const auto& [key, words] : classes)
    for (std::size_t x = 0; x < words.size(); ++x)
      for (std::size_t y = x + 1; y < words.size(); ++y)
        for (auto& piece : split(words[x], words[y], lengths))
          if (!piece.is_coincidence()) seeds.insert(std::move(piece));
  return seeds;
}

std::optional<std::size_t> PairGraph::index_of(const BalancedPair& p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

IntMatrix PairGraph::matrix() const {
  IntMatrix m(size(), size());
  for (std::size_t j = 0; j < size(); ++j)
    for (auto [i, mult] : children[j]) m(i, j) += static_cast<unsigned long>(mult);
  return m;
}

PairGraph build_closure(const std::set<BalancedPair>& seeds, const SubstitutionRule& rule,
                        const std::vector<FieldElement>& lengths, std::size_t cap) {
  PairGraph g;
  auto add = [&](const BalancedPair& p) {
    auto [it, fresh] = g.index.emplace(p, g.nodes.size());
    if (fresh) {
      g.nodes.push_back(p);
      g.coincidence.push_back(p.is_coincidence());
      if (g.nodes.size() > cap)
        throw CapExceeded(g.nodes.size(), "balanced-pair closure exceeded " + std::to_string(cap) + " nodes");
    }
    return it->second;
  };
  for (Letter l = 0; l < rule.size(); ++l) add(BalancedPair{{l}, {l}});
  for (const auto& s : seeds) add(s);
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const BalancedPair p = g.nodes[k];
    std::vector<std::pair<std::size_t, std::size_t>> kids;
    for (const auto& [child, mult] : substitute_pair(p, rule, lengths)) kids.emplace_back(add(child), mult);
    g.children.push_back(std::move(kids));
  }
  return g;
}

bool pure_point_verdict(const PairGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto [i, mult] : g.children[j]) parents[i].push_back(j);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> work;
  for (std::size_t v = 0; v < n; ++v)
    if (g.coincidence[v]) {
      seen[v] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop_front();
    for (std::size_t p : parents[v])
      if (!seen[p]) {
        seen[p] = true;
        work.push_back(p);
      }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

DiscrepancyGraph discrepancy_graph(const PairGraph& g) {
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

#ifndef OSD_BALANCED_PAIR_HPP
#define OSD_BALANCED_PAIR_HPP

#include "osd/matrix.hpp"
#include "osd/rule.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace osd {

/// Unordered pair of words with the same total length. Stored in canonical
/// orientation: (top, bottom) is the lexicographically smaller ordering.
struct BalancedPair {
  Word top;
  Word bottom;

  static BalancedPair canonical(Word a, Word b);
  bool is_coincidence() const { return top.size() == 1 && top == bottom; }

  friend auto operator<=>(const BalancedPair&, const BalancedPair&) = default;
  friend bool operator==(const BalancedPair&, const BalancedPair&) = default;
};

/// Cuts (top, bottom) at every shared interior vertex, left to right.
/// Returned pieces are canonical. Throws UnbalancedInput when the total
/// lengths differ.
std::vector<BalancedPair> split(const Word& top, const Word& bottom, const std::vector<FieldElement>& lengths);

/// Children of p under the substitution, with multiplicities, in order of
/// first appearance.
std::vector<std::pair<BalancedPair, std::size_t>> substitute_pair(const BalancedPair& p, const SubstitutionRule& rule,
                                                                  const std::vector<FieldElement>& lengths);

/// Irreducible non-coincidence pieces of all pairs (u, v) of distinct legal
/// words with equal abelianization and |u| <= seed_factor_length.
std::set<BalancedPair> default_seeds(const SubstitutionRule& rule, const std::vector<FieldElement>& lengths,
                                     std::size_t seed_factor_length = 2);

struct PairGraph {
  std::vector<BalancedPair> nodes;
  /// children[j] lists (child index, multiplicity) in first-appearance order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> children;
  std::vector<bool> coincidence;
  std::map<BalancedPair, std::size_t> index;

  std::size_t size() const { return nodes.size(); }
  std::optional<std::size_t> index_of(const BalancedPair& p) const;
  /// Full substitution matrix over all nodes: (i, j) = multiplicity of i in j.
  IntMatrix matrix() const;
};

inline constexpr std::size_t kDefaultMaxPairs = 100000;

/// Breadth-first closure of the seeds and the letter coincidences under
/// substitute_pair. Nodes are numbered: coincidences in letter order, then
/// seeds in canonical order, then discovery order. Throws CapExceeded.
PairGraph build_closure(const std::set<BalancedPair>& seeds, const SubstitutionRule& rule,
                        const std::vector<FieldElement>& lengths, std::size_t cap = kDefaultMaxPairs);

/// Every node reaches a coincidence.
bool pure_point_verdict(const PairGraph& g);

struct DiscrepancyGraph {
  /// (i, j) = multiplicity of discrepancy i produced by discrepancy j.
  IntMatrix matrix;
  /// Row/column k corresponds to pair-graph node nodes[k].
  std::vector<std::size_t> nodes;
};

DiscrepancyGraph discrepancy_graph(const PairGraph& g);

}  // namespace osd

#endif  // OSD_BALANCED_PAIR_HPP

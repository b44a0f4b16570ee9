#ifndef OSD_OVERLAP_HPP
#define OSD_OVERLAP_HPP

#include "osd/balanced_pair.hpp"

#include <map>
#include <vector>

namespace osd {

/// A top tile and a bottom tile whose supports share interior. The offset
/// is start(bottom) - start(top).
struct Overlap {
  Letter top_letter = 0;
  Letter bottom_letter = 0;
  FieldElement offset;
  FieldElement support_length;

  bool is_coincidence() const;
};

/// Left-to-right overlaps of the two rows of p.
std::vector<Overlap> decompose_overlaps(const BalancedPair& p, const std::vector<FieldElement>& lengths);

/// Canonical form: smaller letter on top; equal letters with offset >= 0.
Overlap canonical_overlap(const Overlap& o);

/// Overlaps produced by inflating both tiles of o, in left-to-right order.
std::vector<Overlap> inflate_overlap(const Overlap& o, const SubstitutionRule& rule,
                                     const std::vector<FieldElement>& lengths);

struct OverlapKey {
  Letter top_letter;
  Letter bottom_letter;
  std::vector<Rational> offset;

  friend bool operator<(const OverlapKey& a, const OverlapKey& b);
};

OverlapKey overlap_key(const Overlap& canonical);

struct OverlapGraph {
  std::vector<Overlap> nodes;  // canonical
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> children;
  std::vector<bool> coincidence;
  std::map<OverlapKey, std::size_t> index;

  std::size_t size() const { return nodes.size(); }
};

/// Closure of the letter coincidences and the overlaps of every discrepancy
/// node of g under overlap inflation. Throws CapExceeded.
OverlapGraph build_overlap_closure(const PairGraph& g, const SubstitutionRule& rule,
                                   const std::vector<FieldElement>& lengths, std::size_t cap = kDefaultMaxPairs);

bool overlap_pure_point(const OverlapGraph& g);

/// Discrepancy restriction, same conventions as discrepancy_graph.
DiscrepancyGraph overlap_discrepancy_graph(const OverlapGraph& g);

}  // namespace osd

#endif  // OSD_OVERLAP_HPP

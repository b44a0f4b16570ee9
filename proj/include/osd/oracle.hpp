#ifndef OSD_ORACLE_HPP
#define OSD_ORACLE_HPP

#include "osd/balanced_pair.hpp"

#include <vector>

namespace osd {

struct TrajectoryStep {
  std::size_t n = 0;
  double total_length = 0;
  double discrepancy_length = 0;
  double density = 0;
};

/// Evolution of a balanced pair under the substitution, kept as integer
/// multiplicities over irreducible pair types.
struct PairTrajectory {
  std::vector<TrajectoryStep> steps;
  double log_lambda = 0;
  int d = 1;
  /// Pair types in discovery order.
  std::vector<BalancedPair> types;
  /// counts[n][k] = multiplicity of types[k] after n steps (shorter rows are
  /// padded with zeros).
  std::vector<std::vector<Integer>> counts;
  /// Sum of block lengths equals lambda^n times the seed length, exactly,
  /// at every step.
  bool lengths_exact = true;
};

/// Throws CapExceeded when the number of pair types exceeds cap.
PairTrajectory iterate_pair_density(const BalancedPair& seed, const SubstitutionRule& rule, const InflationData& data,
                                    std::size_t iterations, std::size_t cap = kDefaultMaxPairs);

struct DecayEstimate {
  double slope = 0;
  double estimated_log_lambda_dc = 0;
  double r_squared = 0;
};

inline constexpr std::size_t kDefaultBurnIn = 5;

/// Least-squares fit of log(density) against n over steps n > burn_in with
/// positive density. Throws InsufficientData with fewer than 4 such steps.
DecayEstimate estimate_decay(const PairTrajectory& t, std::size_t burn_in = kDefaultBurnIn);

/// Distinct return words of `letter` in the prefix of length `horizon` of
/// the iterates of the letter, in order of first appearance.
std::vector<Word> return_words(const SubstitutionRule& rule, Letter letter, std::size_t horizon);

}  // namespace osd

#endif  // OSD_ORACLE_HPP

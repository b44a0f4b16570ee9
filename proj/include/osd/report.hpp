#ifndef OSD_REPORT_HPP
#define OSD_REPORT_HPP

#include "osd/balanced_pair.hpp"
#include "osd/oracle.hpp"
#include "osd/osd.hpp"
#include "osd/overlap.hpp"
#include "osd/spectral.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace osd {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
  std::size_t seed_factor_length = 2;
  std::size_t max_pairs = kDefaultMaxPairs;
  unsigned precision_bits = kDefaultPrecisionBits;
  /// Also run the overlap closure and report its flags.
  bool overlaps = false;
  /// Re-run the closure with seed length L+1 and warn when results move.
  bool seed_sweep = true;
};

struct OverlapSummary {
  std::size_t nodes = 0;
  std::size_t discrepancy_nodes = 0;
  bool pure_point = false;
  bool dc_primitive = false;
  IntPolynomial char_poly_dc;
  std::optional<AlgebraicReal> lambda_dc;
};

struct AnalysisReport {
  AnalysisReport(SubstitutionRule r, InflationData d) : rule(std::move(r)), inflation(std::move(d)) {}

  SubstitutionRule rule;
  InflationData inflation;
  std::set<BalancedPair> seeds;
  PairGraph graph;
  bool pure_point = false;
  DiscrepancyGraph discrepancy;
  SpectralReport spectral;
  OsdResult osd;
  WindowReport window;
  std::optional<OverlapSummary> overlaps;
  std::vector<std::string> warnings;
};

/// Full pipeline. Throws NotPrimitive or CapExceeded.
AnalysisReport analyze(const SubstitutionRule& rule, const AnalysisOptions& options = {});

PisotUnitInfo pisot_unit_info(const InflationData& data);

/// Rounds to 12 significant digits; non-finite values become strings.
Json decimal(double x);

Json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);
Json osd_json(const OsdResult& r);
Json error_json(const std::exception& e);

/// Graphviz digraph of the balanced-pair closure.
std::string to_dot(const PairGraph& g, const SubstitutionRule& rule);

/// Header `n,total_length,discrepancy_length,density`.
std::string to_csv(const PairTrajectory& t);

std::string pair_label(const BalancedPair& p, const SubstitutionRule& rule);

}  // namespace osd

#endif  // OSD_REPORT_HPP

#ifndef OSD_CORPUS_HPP
#define OSD_CORPUS_HPP

#include "osd/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace osd {

enum class EntryKind { Analysis, Product, Formula };

/// Computed quantity within `tolerance` of `expected`.
struct NumericCheck {
  std::string quantity;
  double expected;
  double tolerance;
  std::string provenance;
};

/// "lambda_root" / "lambda_dc_root": the quantity matches the largest real
/// root of `poly` within `tolerance`. "dc_divisible": the discrepancy
/// characteristic polynomial is divisible by `poly`.
struct PolyCheck {
  std::string quantity;
  IntPolynomial poly;
  double tolerance;
  std::string provenance;
};

struct FlagCheck {
  std::string quantity;
  bool expected;
  std::string provenance;
};

struct CorpusEntry {
  std::string name;
  EntryKind kind = EntryKind::Analysis;
  /// Rule texts (one for analyses, two or more for products).
  std::vector<std::string> rules;
  /// Formula entries: spectra given directly.
  IntPolynomial lambda_poly;
  IntPolynomial lambda_dc_poly;
  int d = 1;
  int d_int = 0;
  /// Reference value questioned by its own source.
  bool flagged = false;
  std::vector<NumericCheck> numeric;
  std::vector<PolyCheck> polys;
  std::vector<FlagCheck> flags;
};

struct CorpusRow {
  std::string entry;
  std::string quantity;
  std::string expected;
  std::string computed;
  double tolerance = 0;
  bool pass = false;
  std::string provenance;
  bool flagged = false;
};

struct CorpusResult {
  std::vector<CorpusRow> rows;
  /// Wall time per entry, seconds, in entry order.
  std::vector<std::pair<std::string, double>> timings;
  bool all_pass = true;
};

std::vector<CorpusEntry> default_corpus();

/// Runs the entries (only the one named `only` when given). Unknown names
/// yield an empty result with all_pass false.
CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const std::optional<std::string>& only = std::nullopt,
                        const AnalysisOptions& options = {});

Json corpus_json(const CorpusResult& r);
std::string corpus_text(const CorpusResult& r);

}  // namespace osd

#endif  // OSD_CORPUS_HPP

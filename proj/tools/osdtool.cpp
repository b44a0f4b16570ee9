// Command-line front end: analyze, product, corpus, graph, oracle.

#include "CLI11.hpp"
#include "osd/corpus.hpp"
#include "osd/dsl.hpp"
#include "osd/error.hpp"
#include "osd/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit {
  kOk = 0,
  kParse = 1,
  kNotPrimitive = 2,
  kCap = 3,
  kNonExact = 4,
  kCorpusFail = 5,
  kInsufficient = 6,
  kOther = 7,
};

struct Common {
  std::size_t seed_factor_length = 2;
  std::size_t max_pairs = osd::kDefaultMaxPairs;
  unsigned precision_bits = osd::kDefaultPrecisionBits;
  bool json = false;

  osd::AnalysisOptions options() const {
    osd::AnalysisOptions o;
    o.seed_factor_length = seed_factor_length;
    o.max_pairs = max_pairs;
    o.precision_bits = precision_bits;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed-factor-length", c.seed_factor_length, "Maximal length of seed factors")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  cmd->add_option("--max-pairs", c.max_pairs, "Node cap for the pair closure")->capture_default_str();
  cmd->add_option("--precision-bits", c.precision_bits, "Starting precision of numeric root finding")
      ->check(CLI::Range(53u, 4096u))
      ->capture_default_str();
  cmd->add_flag("--json", c.json, "Emit JSON");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A rule argument is a file path, or inline text when it contains "->".
osd::SubstitutionRule load_rule(const std::string& arg) {
  if (arg.find("->") != std::string::npos) return osd::parse_rule(arg);
  return osd::parse_rule(slurp(arg));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const osd::ParseError*>(&e) || dynamic_cast<const osd::InvalidRule*>(&e)) return kParse;
  if (dynamic_cast<const osd::NotPrimitive*>(&e)) return kNotPrimitive;
  if (dynamic_cast<const osd::CapExceeded*>(&e)) return kCap;
  if (dynamic_cast<const osd::NonExactFactor*>(&e)) return kNonExact;
  if (dynamic_cast<const osd::InsufficientData*>(&e)) return kInsufficient;
  return kOther;
}

int report_error(const std::exception& e, bool json) {
  if (json)
    std::cout << osd::Json{{"error", osd::error_json(e)}}.dump(2) << "\n";
  else
    std::cerr << "error: " << e.what() << "\n";
  return exit_code(e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit separation dimension of one-dimensional substitution tilings"};
  app.require_subcommand(1);

  Common common;
  std::string rule_arg;
  std::vector<std::string> rule_args;
  std::string only;
  std::string dot_path;
  std::string csv_path;
  std::size_t iterations = 25;
  bool overlaps = false;

  auto* analyze = app.add_subcommand("analyze", "Full analysis of one rule");
  analyze->add_option("rule", rule_arg, "Rule file, or inline rule text such as 'a -> ab; b -> a'")->required();
  analyze->add_flag("--overlaps", overlaps, "Also run the overlap closure");
  add_common(analyze, common);

  auto* product = app.add_subcommand("product", "OSD of a product of rules");
  product->add_option("rules", rule_args, "Rule files or inline rules")->required()->expected(2, -1);
  add_common(product, common);

  auto* corpus = app.add_subcommand("corpus", "Run the bundled reference corpus");
  corpus->add_option("--only", only, "Run a single entry");
  add_common(corpus, common);

  auto* graph = app.add_subcommand("graph", "Balanced-pair graph as Graphviz DOT");
  graph->add_option("rule", rule_arg, "Rule file or inline rule")->required();
  graph->add_option("--dot", dot_path, "Output path (default stdout)");
  add_common(graph, common);

  auto* oracle = app.add_subcommand("oracle", "Empirical discrepancy-density decay");
  oracle->add_option("rule", rule_arg, "Rule file or inline rule")->required();
  oracle->add_option("--iterations", iterations, "Number of inflation steps")->capture_default_str();
  oracle->add_option("--csv", csv_path, "Write the trajectory of the selected seed as CSV");
  add_common(oracle, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      osd::AnalysisOptions opts = common.options();
      opts.overlaps = overlaps;
      const osd::AnalysisReport r = osd::analyze(load_rule(rule_arg), opts);
      if (common.json)
        std::cout << osd::to_json(r).dump(2) << "\n";
      else
        std::cout << osd::to_text(r);
      return kOk;
    }

    if (*product) {
      osd::AnalysisOptions opts = common.options();
      opts.seed_sweep = false;
      std::vector<osd::OsdResult> parts;
      osd::Json factors = osd::Json::array();
      for (const auto& a : rule_args) {
        osd::AnalysisReport r = osd::analyze(load_rule(a), opts);
        factors.push_back({{"rule", osd::print_rule_inline(r.rule)}, {"osd", osd::osd_json(r.osd)}});
        parts.push_back(r.osd);
      }
      osd::OsdResult total;
      try {
        total = osd::product_osd(parts);
      } catch (const osd::NonExactFactor& e) {
        if (common.json)
          std::cout << osd::Json{{"factors", factors}, {"error", osd::error_json(e)}}.dump(2) << "\n";
        else
          std::cerr << "error: " << e.what() << "\n";
        return kNonExact;
      }
      if (common.json) {
        std::cout << osd::Json{{"factors", factors}, {"osd", osd::osd_json(total)}}.dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < parts.size(); ++k)
          std::cout << "factor " << k + 1 << ": " << factors[k]["rule"].get<std::string>() << "  OSD "
                    << factors[k]["osd"]["value"].dump() << "\n";
        std::cout << "product OSD: " << osd::decimal(*total.value).dump() << "\n";
      }
      return kOk;
    }

    if (*corpus) {
      std::optional<std::string> filter;
      if (!only.empty()) filter = only;
      const osd::CorpusResult r = osd::run_corpus(osd::default_corpus(), filter, common.options());
      if (common.json)
        std::cout << osd::corpus_json(r).dump(2) << "\n";
      else
        std::cout << osd::corpus_text(r);
      return r.all_pass ? kOk : kCorpusFail;
    }

    if (*graph) {
      const osd::SubstitutionRule rule = load_rule(rule_arg);
      const osd::InflationData data = osd::pf_data(rule, common.precision_bits);
      const auto seeds = osd::default_seeds(rule, data.lengths, common.seed_factor_length);
      const osd::PairGraph g = osd::build_closure(seeds, rule, data.lengths, common.max_pairs);
      const std::string dot = osd::to_dot(g, rule);
      if (dot_path.empty())
        std::cout << dot;
      else
        write_file(dot_path, dot);
      return kOk;
    }

    if (*oracle) {
      const osd::SubstitutionRule rule = load_rule(rule_arg);
      osd::AnalysisOptions opts = common.options();
      opts.seed_sweep = false;
      const osd::AnalysisReport r = osd::analyze(rule, opts);
      if (!r.pure_point) std::cerr << "warning: not pure point; the discrepancy density need not vanish\n";
      // Estimate per default seed and keep the slowest decay.
      std::optional<osd::DecayEstimate> best;
      std::optional<osd::PairTrajectory> best_traj;
      std::optional<osd::InsufficientData> last_error;
      for (const auto& seed : r.seeds) {
        osd::PairTrajectory t = osd::iterate_pair_density(seed, rule, r.inflation, iterations, common.max_pairs);
        try {
          osd::DecayEstimate e = osd::estimate_decay(t);
          if (!best || e.estimated_log_lambda_dc > best->estimated_log_lambda_dc) {
            best = e;
            best_traj = std::move(t);
          }
        } catch (const osd::InsufficientData& e) {
          last_error = e;
          if (!best_traj) best_traj = std::move(t);
        }
      }
      if (!csv_path.empty() && best_traj) write_file(csv_path, osd::to_csv(*best_traj));
      if (!best) {
        if (last_error) throw *last_error;
        throw osd::InsufficientData("no discrepancy seeds");
      }
      const double exact = r.spectral.nilpotent ? -std::numeric_limits<double>::infinity()
                                                : std::log(r.spectral.lambda_dc.to_double());
      if (common.json) {
        std::cout << osd::Json{{"slope", osd::decimal(best->slope)},
                               {"estimated_log_lambda_dc", osd::decimal(best->estimated_log_lambda_dc)},
                               {"r_squared", osd::decimal(best->r_squared)},
                               {"exact_log_lambda_dc", osd::decimal(exact)},
                               {"iterations", iterations}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "estimated log lambda_dc: " << osd::decimal(best->estimated_log_lambda_dc).dump() << "\n";
        std::cout << "exact log lambda_dc:     " << osd::decimal(exact).dump() << "\n";
        std::cout << "slope " << osd::decimal(best->slope).dump() << ", r^2 " << osd::decimal(best->r_squared).dump()
                  << "\n";
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    return report_error(e, common.json);
  }
  return kOk;
}

#include "osd/report.hpp"

#include "osd/dsl.hpp"
#include "osd/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace osd {

namespace {

std::string rational_string(const Rational& q) { return q.get_str(); }

Json coefficients_json(const std::vector<Rational>& c) {
  Json a = Json::array();
  for (const auto& q : c) a.push_back(rational_string(q));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& v = m(i, j);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "infinite" : "-infinite";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct SweepOutcome {
  bool pure_point;
  bool nilpotent;
  AlgebraicReal lambda_dc;
};

SweepOutcome closure_outcome(const SubstitutionRule& rule, const InflationData& data, std::size_t seed_length,
                             std::size_t cap) {
  auto seeds = default_seeds(rule, data.lengths, seed_length);
  PairGraph g = build_closure(seeds, rule, data.lengths, cap);
  SpectralReport s = spectral_report(discrepancy_graph(g).matrix);
  return {pure_point_verdict(g), s.nilpotent, s.lambda_dc};
}

}  // namespace

PisotUnitInfo pisot_unit_info(const InflationData& data) {
  PisotUnitInfo pu;
  pu.is_pisot = data.pisot;
  pu.is_unit = data.unit;
  pu.conjugate_moduli = data.conjugate_moduli;
  pu.complex_conjugates = data.complex_conjugates;
  return pu;
}

AnalysisReport analyze(const SubstitutionRule& rule, const AnalysisOptions& options) {
  AnalysisReport r(rule, pf_data(rule, options.precision_bits));
  const auto& lengths = r.inflation.lengths;
  r.seeds = default_seeds(rule, lengths, options.seed_factor_length);
  r.graph = build_closure(r.seeds, rule, lengths, options.max_pairs);
  r.pure_point = pure_point_verdict(r.graph);
  r.discrepancy = discrepancy_graph(r.graph);
  r.spectral = spectral_report(r.discrepancy.matrix);
  r.osd = osd(r.inflation.lambda, 1, r.spectral, r.pure_point);
  r.window = window_report(r.inflation.lambda, r.spectral.lambda_dc, 1, r.inflation.min_poly_lambda,
                           pisot_unit_info(r.inflation), r.osd);

  if (options.overlaps) {
    OverlapGraph og = build_overlap_closure(r.graph, rule, lengths, options.max_pairs);
    DiscrepancyGraph odc = overlap_discrepancy_graph(og);
    SpectralReport os = spectral_report(odc.matrix);
    OverlapSummary sum;
    sum.nodes = og.size();
    sum.discrepancy_nodes = odc.nodes.size();
    sum.pure_point = overlap_pure_point(og);
    sum.dc_primitive = os.dc_primitive;
    sum.char_poly_dc = os.char_poly_dc;
    if (!os.nilpotent) sum.lambda_dc = os.lambda_dc;
    r.overlaps = std::move(sum);
  }

  if (r.inflation.pisot_undecided)
    r.warnings.push_back("a conjugate of lambda could not be separated from the unit circle; Pisot flag undecided");
  if (rule.constant_length() && !r.inflation.unit)
    r.warnings.push_back(
        "constant-length rule with non-unit inflation factor: control points are left tile endpoints, and the "
        "return-module structure of the tiling is not taken into account");
  const bool contracting = r.spectral.nilpotent || compare(r.spectral.lambda_dc, r.inflation.lambda) < 0;
  if (r.pure_point != contracting)
    r.warnings.push_back(std::string("coincidence verdict (") + (r.pure_point ? "pure point" : "not pure point") +
                         ") disagrees with the density criterion lambda_dc < lambda");
  if (options.seed_sweep) {
    try {
      SweepOutcome next = closure_outcome(rule, r.inflation, options.seed_factor_length + 1, options.max_pairs);
      const bool same = next.pure_point == r.pure_point && next.nilpotent == r.spectral.nilpotent &&
                        (next.nilpotent || equal(next.lambda_dc, r.spectral.lambda_dc));
      if (!same)
        r.warnings.push_back("results change between seed factor length " +
                             std::to_string(options.seed_factor_length) + " and " +
                             std::to_string(options.seed_factor_length + 1) +
                             "; rerun with a larger --seed-factor-length");
    } catch (const CapExceeded&) {
      r.warnings.push_back("closure with seed factor length " + std::to_string(options.seed_factor_length + 1) +
                           " exceeded the node cap; seed-length stability not checked");
    }
  }
  return r;
}

Json decimal(double x) {
  if (!std::isfinite(x)) return fmt(x);
  return std::strtod(fmt(x).c_str(), nullptr);
}

Json osd_json(const OsdResult& r) {
  Json j;
  j["pure_point"] = r.pure_point;
  j["exact"] = r.exact;
  if (r.infinite())
    j["value"] = "infinite";
  else if (r.value)
    j["value"] = decimal(*r.value);
  else
    j["value"] = nullptr;
  j["bounds"] = {decimal(r.lo), decimal(r.hi)};
  j["lyapunov_max"] = decimal(r.lyapunov_max);
  j["lyapunov_min_lower_bound"] = decimal(r.lyapunov_min_lower_bound);
  j["clamped"] = r.clamped;
  return j;
}

Json error_json(const std::exception& e) {
  Json j;
  if (const auto* oe = dynamic_cast<const Error*>(&e)) {
    j["kind"] = oe->kind();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      j["line"] = pe->line();
      j["column"] = pe->column();
    }
    if (const auto* ce = dynamic_cast<const CapExceeded*>(&e)) j["count"] = ce->count();
  } else {
    j["kind"] = "Error";
  }
  j["message"] = e.what();
  return j;
}

std::string pair_label(const BalancedPair& p, const SubstitutionRule& rule) {
  return rule.format_word(p.top) + "|" + rule.format_word(p.bottom);
}

Json to_json(const AnalysisReport& r) {
  const auto& rule = r.rule;
  const auto& inf = r.inflation;
  Json j;
  Json images;
  for (Letter l = 0; l < rule.size(); ++l) images[rule.alphabet().name(l)] = rule.format_word(rule.image(l));
  j["rule"] = {{"alphabet", rule.alphabet().names()}, {"images", images}, {"text", print_rule_inline(rule)}};
  j["inflation_matrix"] = matrix_json(inf.matrix);
  j["char_poly"] = inf.char_poly.to_string();
  j["lambda"] = {{"min_poly", inf.min_poly_lambda.to_string()}, {"decimal", decimal(inf.lambda.to_double())}};
  j["primitive"] = inf.primitive;
  j["pisot"] = inf.pisot;
  j["pisot_undecided"] = inf.pisot_undecided;
  j["unit"] = inf.unit;
  Json moduli = Json::array();
  for (const auto& m : inf.conjugate_moduli) moduli.push_back(decimal(m.modulus));
  j["conjugate_moduli"] = moduli;
  Json lengths = Json::array();
  for (Letter l = 0; l < rule.size(); ++l)
    lengths.push_back({{"letter", rule.alphabet().name(l)},
                       {"decimal", decimal(inf.lengths[l].to_double())},
                       {"coefficients", coefficients_json(inf.lengths[l].canonical_key())}});
  j["lengths"] = lengths;
  j["pure_point"] = r.pure_point;
  Json seeds = Json::array();
  for (const auto& s : r.seeds) seeds.push_back(pair_label(s, rule));
  j["pair_graph"] = {{"nodes", r.graph.size()},
                     {"discrepancy_nodes", r.discrepancy.nodes.size()},
                     {"seeds", seeds}};
  j["discrepancy_char_poly"] = r.spectral.char_poly_dc.to_string();
  Json ldc;
  ldc["nilpotent"] = r.spectral.nilpotent;
  if (r.spectral.dominant_scc)
    ldc["block_poly"] = r.spectral.sccs[*r.spectral.dominant_scc].char_poly.to_string();
  else
    ldc["block_poly"] = nullptr;
  ldc["decimal"] = decimal(r.spectral.lambda_dc.to_double());
  j["lambda_dc"] = ldc;
  Json sccs = Json::array();
  for (const auto& s : r.spectral.sccs)
    if (s.recurrent)
      sccs.push_back({{"size", s.nodes.size()},
                      {"char_poly", s.char_poly.to_string()},
                      {"radius", decimal(s.radius.to_double())}});
  j["recurrent_components"] = sccs;
  j["uniform"] = r.spectral.uniform;
  j["dc_primitive"] = r.spectral.dc_primitive;
  j["osd"] = osd_json(r.osd);
  Json w;
  w["d_int"] = r.window.d_int;
  w["isotropic"] = r.window.isotropic;
  w["applicable"] = r.window.applicable;
  w["boundary_dim"] = r.window.boundary_dim ? decimal(*r.window.boundary_dim) : Json(nullptr);
  w["lower_bound"] = decimal(r.window.lower_bound);
  w["naive_upper_bound"] = r.window.naive_upper_bound ? decimal(*r.window.naive_upper_bound) : Json(nullptr);
  j["window"] = w;
  if (r.overlaps) {
    const auto& o = *r.overlaps;
    j["overlaps"] = {{"nodes", o.nodes},
                     {"discrepancy_nodes", o.discrepancy_nodes},
                     {"pure_point", o.pure_point},
                     {"dc_primitive", o.dc_primitive},
                     {"discrepancy_char_poly", o.char_poly_dc.to_string()},
                     {"lambda_dc", o.lambda_dc ? decimal(o.lambda_dc->to_double()) : Json(nullptr)}};
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  const auto& rule = r.rule;
  const auto& inf = r.inflation;
  std::ostringstream os;
  os << "rule:            " << print_rule_inline(rule) << "\n";
  os << "char poly:       " << inf.char_poly.to_string() << "\n";
  os << "lambda:          " << fmt(inf.lambda.to_double()) << "  (min poly " << inf.min_poly_lambda.to_string()
     << ")\n";
  os << "pisot/unit:      " << (inf.pisot_undecided ? "undecided" : (inf.pisot ? "yes" : "no")) << " / "
     << (inf.unit ? "yes" : "no") << "\n";
  os << "lengths:        ";
  for (Letter l = 0; l < rule.size(); ++l) os << " " << rule.alphabet().name(l) << "=" << fmt(inf.lengths[l].to_double());
  os << "\n";
  os << "pair graph:      " << r.graph.size() << " nodes, " << r.discrepancy.nodes.size() << " discrepancies\n";
  os << "pure point:      " << (r.pure_point ? "yes" : "no") << "\n";
  os << "M_dc char poly:  " << r.spectral.char_poly_dc.to_string() << "\n";
  if (r.spectral.nilpotent)
    os << "lambda_dc:       nilpotent\n";
  else
    os << "lambda_dc:       " << fmt(r.spectral.lambda_dc.to_double()) << "  (block "
       << r.spectral.sccs[*r.spectral.dominant_scc].char_poly.to_string() << ")\n";
  os << "uniform:         " << (r.spectral.uniform ? "yes" : "no") << ", dc primitive "
     << (r.spectral.dc_primitive ? "yes" : "no") << "\n";
  if (r.osd.infinite())
    os << "OSD:             infinite\n";
  else if (r.osd.exact)
    os << "OSD:             " << fmt(*r.osd.value) << (r.osd.clamped ? " (clamped)" : "") << "\n";
  else
    os << "OSD:             in [" << fmt(r.osd.lo) << ", " << fmt(r.osd.hi) << "]\n";
  os << "lyapunov max:    " << fmt(r.osd.lyapunov_max) << "\n";
  os << "window:          d_int=" << r.window.d_int << (r.window.isotropic ? " isotropic" : " non-isotropic");
  if (r.window.boundary_dim) os << ", boundary dim " << fmt(*r.window.boundary_dim);
  os << ", lower bound " << fmt(r.window.lower_bound);
  if (r.window.naive_upper_bound) os << ", naive upper " << fmt(*r.window.naive_upper_bound);
  os << "\n";
  if (r.overlaps) {
    os << "overlaps:        " << r.overlaps->nodes << " nodes, pure point " << (r.overlaps->pure_point ? "yes" : "no")
       << ", dc primitive " << (r.overlaps->dc_primitive ? "yes" : "no") << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string to_dot(const PairGraph& g, const SubstitutionRule& rule) {
  std::ostringstream os;
  os << "digraph pairs {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  n" << v << " [label=\"" << pair_label(g.nodes[v], rule) << "\""
       << (g.coincidence[v] ? ", shape=box" : "") << "];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    for (auto [child, mult] : g.children[v])
      os << "  n" << v << " -> n" << child << " [label=\"" << mult << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_csv(const PairTrajectory& t) {
  std::ostringstream os;
  os << "n,total_length,discrepancy_length,density\n";
  for (const auto& s : t.steps)
    os << s.n << "," << fmt(s.total_length) << "," << fmt(s.discrepancy_length) << "," << fmt(s.density) << "\n";
  return os.str();
}

}  // namespace osd

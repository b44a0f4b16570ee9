#include "osd/spectral.hpp"

#include "osd/rule.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace osd {

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntMatrix am = a * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer ck = -trace;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = ck;
  }
  return IntPolynomial(std::move(c));
}

SccDecomposition scc_decompose(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("scc_decompose: matrix not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, j) > 0) succ[j].push_back(i);

  // Iterative Tarjan.
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), raw_comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> raw;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < succ[v].size()) {
        std::size_t w = succ[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_comp[w] = raw.size();
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        raw.push_back(std::move(comp));
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }

  // Deterministic order by smallest member.
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return raw[x][0] < raw[y][0]; });
  std::vector<std::size_t> rank(raw.size());
  SccDecomposition out;
  out.component_of.assign(n, 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    out.components.push_back(raw[order[r]]);
  }
  for (std::size_t v = 0; v < n; ++v) out.component_of[v] = rank[raw_comp[v]];
  out.recurrent.assign(out.components.size(), false);
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    const auto& comp = out.components[c];
    out.recurrent[c] = comp.size() > 1 || m(comp[0], comp[0]) > 0;
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i : succ[j])
      if (out.component_of[i] != out.component_of[j])
        out.condensation.emplace(out.component_of[j], out.component_of[i]);
  return out;
}

SpectralReport spectral_report(const IntMatrix& m_dc) {
  SpectralReport rep;
  rep.char_poly_dc = char_poly(m_dc);
  rep.decomposition = scc_decompose(m_dc);
  const auto& dec = rep.decomposition;
  const std::size_t nc = dec.components.size();

  for (std::size_t c = 0; c < nc; ++c) {
    SccSpectrum s;
    s.nodes = dec.components[c];
    s.recurrent = dec.recurrent[c];
    s.char_poly = char_poly(m_dc.submatrix(s.nodes));
    if (s.recurrent) s.radius = isolate_largest_real_root(s.char_poly);
    rep.sccs.push_back(std::move(s));
  }

  for (std::size_t c = 0; c < nc; ++c) {
    if (!rep.sccs[c].recurrent) continue;
    if (rep.nilpotent || compare(rep.sccs[c].radius, rep.lambda_dc) > 0) {
      rep.lambda_dc = rep.sccs[c].radius;
      rep.dominant_scc = c;
      rep.nilpotent = false;
    }
  }

  // Reachability over the condensation DAG. Tarjan emits components in
  // reverse topological order, but we renumbered, so iterate to a fixpoint
  // over a topological order computed here.
  std::vector<std::vector<std::size_t>> dag(nc);
  std::vector<std::size_t> indeg(nc, 0);
  for (auto [from, to] : dec.condensation) {
    dag[from].push_back(to);
    ++indeg[to];
  }
  std::vector<std::size_t> topo;
  for (std::size_t c = 0; c < nc; ++c)
    if (indeg[c] == 0) topo.push_back(c);
  for (std::size_t k = 0; k < topo.size(); ++k)
    for (std::size_t to : dag[topo[k]])
      if (--indeg[to] == 0) topo.push_back(to);

  std::vector<AlgebraicReal> comp_lambda;
  comp_lambda.reserve(nc);
  for (std::size_t c = 0; c < nc; ++c) comp_lambda.push_back(rep.sccs[c].radius);
  std::vector<bool> comp_recurrent(dec.recurrent.begin(), dec.recurrent.end());
  for (std::size_t k = topo.size(); k-- > 0;) {
    const std::size_t c = topo[k];
    for (std::size_t to : dag[c]) {
      if (compare(comp_lambda[to], comp_lambda[c]) > 0) comp_lambda[c] = comp_lambda[to];
      if (comp_recurrent[to]) comp_recurrent[c] = true;
    }
  }

  const std::size_t n = m_dc.rows();
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t c = dec.component_of[v];
    rep.node_lambda.push_back(comp_lambda[c]);
    rep.node_recurrent.push_back(comp_recurrent[c]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!rep.node_recurrent[v]) continue;
    if (!equal(rep.node_lambda[v], rep.lambda_dc)) rep.uniform = false;
    if (!rep.min_recurrent_lambda || compare(rep.node_lambda[v], *rep.min_recurrent_lambda) < 0)
      rep.min_recurrent_lambda = rep.node_lambda[v];
  }
  rep.dc_primitive = n > 0 && is_primitive(m_dc);
  return rep;
}

}  // namespace osd

#ifndef OSD_SPECTRAL_HPP
#define OSD_SPECTRAL_HPP

#include "osd/algebraic.hpp"
#include "osd/matrix.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace osd {

/// det(xI - M), computed exactly by the Faddeev-LeVerrier recurrence.
IntPolynomial char_poly(const IntMatrix& m);

/// Strongly connected components of the digraph with an edge j -> i
/// whenever m(i, j) > 0 (parent j produces child i).
struct SccDecomposition {
  /// Components ordered by their smallest node index; nodes sorted.
  std::vector<std::vector<std::size_t>> components;
  /// Component holds a cycle (more than one node, or a self-loop).
  std::vector<bool> recurrent;
  std::vector<std::size_t> component_of;
  /// Edges between distinct components, (from, to).
  std::set<std::pair<std::size_t, std::size_t>> condensation;
};

SccDecomposition scc_decompose(const IntMatrix& m);

struct SccSpectrum {
  std::vector<std::size_t> nodes;
  bool recurrent = false;
  IntPolynomial char_poly;
  /// Spectral radius of the restricted matrix (0 for transient singletons).
  AlgebraicReal radius = AlgebraicReal::from_rational(0);
};

struct SpectralReport {
  IntPolynomial char_poly_dc;
  bool nilpotent = true;
  /// Leading eigenvalue of M_dc; zero when nilpotent.
  AlgebraicReal lambda_dc = AlgebraicReal::from_rational(0);
  /// Index into `sccs` of the first component attaining lambda_dc.
  std::optional<std::size_t> dominant_scc;
  std::vector<SccSpectrum> sccs;
  SccDecomposition decomposition;
  /// Per node: maximal radius over components reachable from the node.
  std::vector<AlgebraicReal> node_lambda;
  /// Per node: its forward closure contains a cycle.
  std::vector<bool> node_recurrent;
  /// Every recurrent node sees lambda_dc.
  bool uniform = true;
  bool dc_primitive = false;
  /// Smallest node_lambda over recurrent nodes.
  std::optional<AlgebraicReal> min_recurrent_lambda;
};

SpectralReport spectral_report(const IntMatrix& m_dc);

}  // namespace osd

#endif  // OSD_SPECTRAL_HPP

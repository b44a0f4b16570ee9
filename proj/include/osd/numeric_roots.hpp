#ifndef OSD_NUMERIC_ROOTS_HPP
#define OSD_NUMERIC_ROOTS_HPP

#include "osd/polynomial.hpp"

#include <memory>
#include <vector>

namespace osd {

/// A numerically computed complex root with an a posteriori inclusion
/// radius: the closed disk of that radius around (re, im) contains a root.
struct ComplexRoot {
  double re;
  double im;
  double radius;
  double modulus;
};

/// All complex roots of a squarefree polynomial via Aberth iteration in
/// MPFR arithmetic. Inclusion radii follow the Weierstrass bound
/// n |p(z)| / |a_n prod_{j != i} (z - z_j)|; when the disks are pairwise
/// disjoint each holds exactly one root.
class ComplexRootSet {
 public:
  ComplexRootSet(const IntPolynomial& squarefree, unsigned precision_bits);
  ~ComplexRootSet();
  ComplexRootSet(ComplexRootSet&&) noexcept;
  ComplexRootSet& operator=(ComplexRootSet&&) noexcept;

  std::size_t size() const { return roots_.size(); }
  const ComplexRoot& operator[](std::size_t i) const { return roots_[i]; }
  const std::vector<ComplexRoot>& roots() const { return roots_; }
  bool disjoint() const { return disjoint_; }
  bool converged() const { return converged_; }

  /// Coefficients (ascending) of lc(p) * prod_{i in subset} (x - z_i)
  /// rounded to the nearest integers. Returns false when a coefficient is
  /// not within `tolerance` of a Gaussian integer with zero imaginary part.
  bool rounded_factor(const std::vector<std::size_t>& subset, std::vector<Integer>& out,
                      double tolerance = 1e-6) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::vector<ComplexRoot> roots_;
  bool disjoint_ = false;
  bool converged_ = false;
};

}  // namespace osd

#endif  // OSD_NUMERIC_ROOTS_HPP

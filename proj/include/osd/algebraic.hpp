#ifndef OSD_ALGEBRAIC_HPP
#define OSD_ALGEBRAIC_HPP

#include "osd/polynomial.hpp"

#include <memory>
#include <vector>

namespace osd {

/// Precomputed Sturm sequence of a nonzero polynomial; counts distinct real
/// roots in open intervals.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);
  /// Number of distinct real roots in (lo, hi). Throws EndpointIsRoot if p
  /// vanishes at either endpoint.
  unsigned count(const Rational& lo, const Rational& hi) const;
  const IntPolynomial& polynomial() const { return seq_.front(); }

 private:
  int variations(const Rational& x) const;
  std::vector<IntPolynomial> seq_;
};

unsigned sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// A real algebraic number: a root of `defining_poly` isolated by the
/// interval [lo, hi]. The interval holds exactly one root and neither
/// endpoint is a root.
class AlgebraicReal {
 public:
  /// Validating constructor; throws std::invalid_argument if the interval
  /// does not isolate exactly one root.
  AlgebraicReal(IntPolynomial defining_poly, Rational lo, Rational hi);
  static AlgebraicReal from_rational(const Rational& r);

  const IntPolynomial& defining_poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  /// Nearest double, from a refined copy.
  double to_double() const;
  /// Sign of the number (exact).
  int sign() const;
  std::string to_string(int digits = 12) const;

 private:
  friend AlgebraicReal refine(const AlgebraicReal& a, const Rational& eps);
  struct Unchecked {};
  AlgebraicReal(Unchecked, IntPolynomial poly, std::shared_ptr<const IntPolynomial> sqfree, Rational lo,
                Rational hi);

  IntPolynomial poly_;
  // Squarefree part of poly_, which changes sign across the isolated root.
  std::shared_ptr<const IntPolynomial> sqfree_;
  Rational lo_;
  Rational hi_;
};

/// Largest real root of p, isolated to width <= 2^-64.
AlgebraicReal isolate_largest_real_root(const IntPolynomial& p);

/// Same root with interval width <= eps (unchanged when already narrower).
AlgebraicReal refine(const AlgebraicReal& a, const Rational& eps);

/// Exact equality: the defining polynomials share a root inside the
/// intersection of the isolating intervals.
bool equal(const AlgebraicReal& a, const AlgebraicReal& b);
/// Exact three-way comparison (-1, 0, +1).
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMaxPrecisionBits = 2048;

/// Irreducible primitive integer polynomial vanishing at `a`, found by
/// clustering numeric roots of the squarefree part and verifying each
/// candidate by exact division. Throws PrecisionExhausted.
IntPolynomial min_poly_of(const AlgebraicReal& a, unsigned precision_bits = kDefaultPrecisionBits);

struct ConjugateModulus {
  double modulus;
  double error;  // certified radius bound
};

struct PisotUnitInfo {
  bool is_pisot = false;
  bool is_unit = false;
  /// Moduli of the roots other than the largest real one, descending.
  std::vector<ConjugateModulus> conjugate_moduli;
  /// Number of non-real conjugates.
  int complex_conjugates = 0;
};

/// Pisot and unit classification of a monic irreducible polynomial whose
/// largest real root exceeds 1. Throws BoundaryCase when a conjugate modulus
/// cannot be separated from 1.
PisotUnitInfo pisot_unit_check(const IntPolynomial& m, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace osd

#endif  // OSD_ALGEBRAIC_HPP

#ifndef OSD_POLYNOMIAL_HPP
#define OSD_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace osd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree. Always canonical: no trailing zero
/// coefficients, so the zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);

  /// Convenience constructor from descending-power coefficients, e.g.
  /// `descending({1, -1, -1})` is x^2 - x - 1.
  static IntPolynomial descending(std::initializer_list<long> coeffs);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// Primitive integer polynomial with the same roots as the rational
  /// coefficient vector (denominators cleared, content removed).
  static IntPolynomial from_rational(const std::vector<Rational>& ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer content() const;
  /// Content removed and leading coefficient made positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  /// Exact sign of p(x); uses homogeneous evaluation over the integers.
  int sign_at(const Rational& x) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  /// Descending-power rendering such as "x^3-3x^2-x+4".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient (subresultant PRS). gcd(0, 0) is 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// True iff `d` divides `p` in Q[x]. `d` must be nonzero.
bool divides(const IntPolynomial& d, const IntPolynomial& p);

/// Exact quotient p / d over Q, with integer coefficients after removing
/// content. Requires divides(d, p).
IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d);

/// Product of the distinct irreducible factors of p (p / gcd(p, p')).
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Cauchy bound: every complex root z of p satisfies |z| < bound.
Rational root_bound(const IntPolynomial& p);

/// Rational-coefficient polynomials in ascending order, used for field
/// arithmetic. Canonical form drops trailing zeros.
namespace ratpoly {
using Poly = std::vector<Rational>;
void trim(Poly& p);
Poly from_int(const IntPolynomial& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Polynomial division; `b` must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
Poly mod(const Poly& a, const Poly& b);
/// Returns g = gcd(a, b) (monic) and sets s with s*a = g (mod b).
Poly gcd_ext(const Poly& a, const Poly& b, Poly& s);
}  // namespace ratpoly

}  // namespace osd

#endif  // OSD_POLYNOMIAL_HPP

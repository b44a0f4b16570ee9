#ifndef OSD_FIELD_HPP
#define OSD_FIELD_HPP

#include "osd/algebraic.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace osd {

/// The ambient ring Q[x]/(modulus) together with the real root at which
/// its elements are evaluated. The modulus may be reducible; equality and
/// sign are always decided at `root`.
class FieldContext {
 public:
  FieldContext(IntPolynomial modulus, AlgebraicReal root);

  const IntPolynomial& modulus() const { return modulus_; }
  const AlgebraicReal& root() const { return root_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

  /// Optional minimal polynomial of the root. When present, elements have
  /// a canonical representative (remainder modulo it), used as hash key.
  void set_min_poly(IntPolynomial m);
  const std::optional<IntPolynomial>& min_poly() const { return min_poly_; }

 private:
  IntPolynomial modulus_;
  AlgebraicReal root_;
  std::optional<IntPolynomial> min_poly_;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// Element of Q[x]/(p), identified with its value q(root).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldContextPtr ctx, std::vector<Rational> coeffs);
  static FieldElement constant(FieldContextPtr ctx, const Rational& c);
  /// The class of x, i.e. the root itself.
  static FieldElement generator(FieldContextPtr ctx);

  const FieldContextPtr& context() const { return ctx_; }
  /// Always deg(modulus) entries, ascending.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rational& s) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);

  /// An element u with (u * this)(root) = 1; needs this(root) != 0.
  /// Works for reducible moduli by inverting modulo the factor of the
  /// modulus that vanishes at the root.
  FieldElement inverse_at_root() const;

  /// Remainder modulo the context's minimal polynomial (ascending,
  /// trimmed). Equal values give identical keys.
  std::vector<Rational> canonical_key() const;

  double to_double() const;

 private:
  FieldContextPtr ctx_;
  std::vector<Rational> coeffs_;
};

/// True iff q(root) = 0, decided by gcd(modulus, q) and a Sturm count on
/// the root's isolating interval.
bool field_is_zero(const FieldElement& e);

/// Sign of q(root) in {-1, 0, +1}.
int field_sign(const FieldElement& e);

/// Exact equality of values.
inline bool field_equal(const FieldElement& a, const FieldElement& b) { return field_is_zero(a - b); }

}  // namespace osd

#endif  // OSD_FIELD_HPP

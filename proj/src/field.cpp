#include "osd/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace osd {

namespace {

Rational pow2_neg(unsigned e) {
  Rational r = 1;
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), e);
  return r;
}

struct Interval {
  Rational lo;
  Rational hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// Sign of q on [lo, hi] when it is constant there, else 0.
int interval_sign(const std::vector<Rational>& q, const Rational& lo, const Rational& hi) {
  Interval x{lo, hi};
  Interval acc{0, 0};
  for (std::size_t k = q.size(); k-- > 0;) {
    acc = mul(acc, x);
    acc.lo += q[k];
    acc.hi += q[k];
  }
  if (acc.lo > 0) return 1;
  if (acc.hi < 0) return -1;
  return 0;
}

}  // namespace

FieldContext::FieldContext(IntPolynomial modulus, AlgebraicReal root)
    : modulus_(std::move(modulus)), root_(refine(root, pow2_neg(96) * (abs(root.lo()) + 1))) {
  if (modulus_.degree() < 1) throw std::invalid_argument("FieldContext: modulus must have degree >= 1");
  IntPolynomial g = gcd(modulus_, root_.defining_poly());
  if (g.degree() < 1 || sturm_count(g, root_.lo(), root_.hi()) != 1)
    throw std::invalid_argument("FieldContext: root is not a root of the modulus");
}

void FieldContext::set_min_poly(IntPolynomial m) { min_poly_ = std::move(m); }

FieldElement::FieldElement(FieldContextPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("FieldElement: null context");
  const std::size_t n = ctx_->degree();
  ratpoly::trim(coeffs);
  if (coeffs.size() > n) coeffs = ratpoly::mod(coeffs, ratpoly::from_int(ctx_->modulus()));
  coeffs.resize(n, Rational(0));
  coeffs_ = std::move(coeffs);
}

FieldElement FieldElement::constant(FieldContextPtr ctx, const Rational& c) {
  return FieldElement(std::move(ctx), {c});
}

FieldElement FieldElement::generator(FieldContextPtr ctx) {
  return FieldElement(std::move(ctx), {Rational(0), Rational(1)});
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r(*this);
  r += o;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  FieldElement r(*this);
  r -= o;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  ratpoly::Poly a(coeffs_), b(o.coeffs_);
  ratpoly::trim(a);
  ratpoly::trim(b);
  return FieldElement(ctx_, ratpoly::mul(a, b));
}

FieldElement FieldElement::operator*(const Rational& s) const {
  FieldElement r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

FieldElement FieldElement::inverse_at_root() const {
  if (field_is_zero(*this)) throw std::domain_error("inverse_at_root: element vanishes at the root");
  ratpoly::Poly q(coeffs_);
  ratpoly::trim(q);
  ratpoly::Poly h = ratpoly::from_int(ctx_->modulus());
  ratpoly::Poly s;
  while (true) {
    ratpoly::Poly g = ratpoly::gcd_ext(ratpoly::mod(q, h), h, s);
    if (g.size() <= 1) break;
    // g does not vanish at the root, so the quotient keeps the root.
    ratpoly::Poly quot, rem;
    ratpoly::divmod(h, g, quot, rem);
    h = std::move(quot);
  }
  return FieldElement(ctx_, s);
}

std::vector<Rational> FieldElement::canonical_key() const {
  ratpoly::Poly q(coeffs_);
  ratpoly::trim(q);
  if (ctx_->min_poly()) return ratpoly::mod(q, ratpoly::from_int(*ctx_->min_poly()));
  return q;
}

double FieldElement::to_double() const {
  // Evaluate at a tightly refined root; rounding to double dominates.
  const AlgebraicReal& r = ctx_->root();
  Rational x = (r.lo() + r.hi()) / 2;
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc.get_d();
}

bool field_is_zero(const FieldElement& e) {
  const auto& c = e.coefficients();
  if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) return true;
  const FieldContext& ctx = *e.context();
  IntPolynomial q = IntPolynomial::from_rational(c);
  IntPolynomial g = gcd(ctx.modulus(), q);
  if (g.degree() < 1) return false;
  // Endpoints are not roots of the modulus, hence not of g.
  return sturm_count(g, ctx.root().lo(), ctx.root().hi()) > 0;
}

int field_sign(const FieldElement& e) {
  const auto& c = e.coefficients();
  AlgebraicReal r = e.context()->root();
  if (int s = interval_sign(c, r.lo(), r.hi()); s != 0) return s;
  if (field_is_zero(e)) return 0;
  while (true) {
    r = refine(r, r.width() * pow2_neg(16));
    if (int s = interval_sign(c, r.lo(), r.hi()); s != 0) return s;
  }
}

}  // namespace osd

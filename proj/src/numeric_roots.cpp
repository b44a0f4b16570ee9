#include "osd/numeric_roots.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>

namespace osd {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

struct Cx {
  Real re;
  Real im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real norm(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// Restores the thread's default MPFR precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

}  // namespace

struct ComplexRootSet::Impl {
  unsigned bits;
  std::vector<Real> coeffs;  // ascending
  std::vector<Cx> z;
};

ComplexRootSet::ComplexRootSet(ComplexRootSet&&) noexcept = default;
ComplexRootSet& ComplexRootSet::operator=(ComplexRootSet&&) noexcept = default;
ComplexRootSet::~ComplexRootSet() = default;

ComplexRootSet::ComplexRootSet(const IntPolynomial& p, unsigned precision_bits)
    : impl_(std::make_unique<Impl>()) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots: polynomial of degree < 1");
  PrecisionScope scope(precision_bits);
  impl_->bits = precision_bits;
  const std::size_t n = static_cast<std::size_t>(p.degree());
  for (const auto& c : p.coefficients()) impl_->coeffs.push_back(to_real(c));
  const auto& a = impl_->coeffs;

  auto eval = [&](const Cx& x, Cx& value, Cx& deriv) {
    value = {a[n], Real(0)};
    deriv = {Real(0), Real(0)};
    for (std::size_t k = n; k-- > 0;) {
      deriv = deriv * x + value;
      value = value * x + Cx{a[k], Real(0)};
    }
  };

  // Initial points on a circle of radius given by the geometric mean of
  // the roots' moduli, with an irrational angular offset.
  Real radius = pow(abs(a[0] / a[n]), Real(1) / Real(n));
  if (radius == 0) radius = 1;
  const Real pi = boost::math::constants::pi<Real>();
  auto& z = impl_->z;
  z.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = 2 * pi * Real(k) / Real(n) + Real(0.4);
    z[k] = {radius * cos(angle), radius * sin(angle)};
  }

  const Real tol = ldexp(Real(1), -static_cast<int>(precision_bits) + 12);
  converged_ = false;
  for (int iter = 0; iter < 2000 && !converged_; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Cx value, deriv;
      eval(z[i], value, deriv);
      if (value.re == 0 && value.im == 0) continue;
      Cx ratio = value / deriv;
      Cx sum{Real(0), Real(0)};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum = sum + Cx{Real(1), Real(0)} / (z[i] - z[j]);
      Cx step = ratio / (Cx{Real(1), Real(0)} - ratio * sum);
      z[i] = z[i] - step;
      Real rel = norm(step) / (norm(z[i]) > 1 ? norm(z[i]) : Real(1));
      if (rel > worst) worst = rel;
    }
    if (worst < tol) converged_ = true;
  }

  roots_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Cx value, deriv;
    eval(z[i], value, deriv);
    Real denom = abs(a[n]);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= norm(z[i] - z[j]);
    Real rad = denom == 0 ? Real(INFINITY) : Real(n) * norm(value) / denom;
    // Account for the working precision itself.
    rad += ldexp(norm(z[i]) + 1, -static_cast<int>(precision_bits) + 4);
    roots_[i] = {z[i].re.convert_to<double>(), z[i].im.convert_to<double>(), rad.convert_to<double>(),
                 norm(z[i]).convert_to<double>()};
    // Round radii up so the double value still bounds the true radius.
    roots_[i].radius = std::nextafter(roots_[i].radius, INFINITY);
  }
  disjoint_ = converged_;
  for (std::size_t i = 0; i < n && disjoint_; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Real dist = norm(z[i] - z[j]);
      if (dist.convert_to<double>() <= roots_[i].radius + roots_[j].radius) {
        disjoint_ = false;
        break;
      }
    }
}

bool ComplexRootSet::rounded_factor(const std::vector<std::size_t>& subset, std::vector<Integer>& out,
                                    double tolerance) const {
  PrecisionScope scope(impl_->bits);
  std::vector<Cx> poly{{impl_->coeffs.back(), Real(0)}};
  for (std::size_t idx : subset) {
    const Cx& root = impl_->z.at(idx);
    std::vector<Cx> next(poly.size() + 1, Cx{Real(0), Real(0)});
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - poly[k] * root;
    }
    poly = std::move(next);
  }
  out.clear();
  for (const auto& c : poly) {
    if (abs(c.im) > tolerance) return false;
    Real r = round(c.re);
    if (abs(c.re - r) > tolerance) return false;
    Integer v;
    mpfr_get_z(v.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    out.push_back(v);
  }
  return true;
}

}  // namespace osd

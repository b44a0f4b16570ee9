#include "osd/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace osd {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::descending(std::initializer_list<long> coeffs) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_rational(const std::vector<Rational>& ascending) {
  Integer den = 1;
  for (const auto& q : ascending) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> c;
  c.reserve(ascending.size());
  for (const auto& q : ascending) c.push_back(Integer(q.get_num() * (den / q.get_den())));
  return IntPolynomial(std::move(c)).primitive_part();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    g = ::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c(coeffs_);
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(c));
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = coeffs_.back();
  Integer bp = 1;
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    bp *= b;
    acc = acc * a + coeffs_[k] * bp;
  }
  return sgn(acc);
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + Rational(coeffs_[k]);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].get_d();
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
  std::vector<Integer> c(a.coeffs_);
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree() + 1;
  std::vector<Integer> r(a.coefficients());
  const auto& bc = b.coefficients();
  const Integer& lb = b.leading();
  const std::size_t db = bc.size() - 1;
  int steps = 0;
  while (r.size() > db && !r.empty()) {
    const Integer lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i < bc.size(); ++i) r[i + shift] -= lr * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  Integer factor;
  mpz_pow_ui(factor.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta - steps));
  for (auto& x : r) x *= factor;
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  IntPolynomial a = a0.primitive_part();
  IntPolynomial b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPolynomial({Integer(1)});
    a = b;
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer divisor = g * hd;
    std::vector<Integer> rc(r.coefficients());
    for (auto& x : rc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = IntPolynomial(std::move(rc));
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
  return b.primitive_part();
}

bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
  return pseudo_remainder(p, d).is_zero();
}

IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d) {
  ratpoly::Poly q, r;
  ratpoly::divmod(ratpoly::from_int(p), ratpoly::from_int(d), q, r);
  if (!r.empty()) throw std::invalid_argument("exact_quotient: nonzero remainder");
  return IntPolynomial::from_rational(q);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return exact_quotient(p, g);
}

Rational root_bound(const IntPolynomial& p) {
  Rational best = 0;
  const Rational lead = abs(Rational(p.leading()));
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p.coeff(static_cast<std::size_t>(i)))) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

namespace ratpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly from_int(const IntPolynomial& p) {
  Poly r;
  r.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
  if (b.empty()) throw std::invalid_argument("ratpoly::divmod: zero divisor");
  remainder = a;
  trim(remainder);
  quotient.assign(remainder.size() >= b.size() ? remainder.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!remainder.empty() && remainder.size() >= b.size()) {
    const std::size_t shift = remainder.size() - b.size();
    Rational f = remainder.back() / lb;
    quotient[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) remainder[i + shift] -= f * b[i];
    remainder.pop_back();
    trim(remainder);
  }
  trim(quotient);
}

Poly mod(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return r;
}

Poly gcd_ext(const Poly& a, const Poly& b, Poly& s) {
  Poly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  Poly s0{Rational(1)}, s1;
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.empty()) {
    Rational lc = r0.back();
    for (auto& c : r0) c /= lc;
    for (auto& c : s0) c /= lc;
  }
  s = std::move(s0);
  return r0;
}

}  // namespace ratpoly

}  // namespace osd

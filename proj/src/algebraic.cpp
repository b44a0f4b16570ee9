#include "osd/algebraic.hpp"

#include "osd/error.hpp"
#include "osd/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace osd {

namespace {

IntPolynomial divide_positive_content(const IntPolynomial& p) {
  Integer g = p.content();
  if (g <= 1) return p;
  std::vector<Integer> c(p.coefficients());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial negate(const IntPolynomial& p) { return Integer(-1) * p; }

Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sturm sequences

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
  seq_.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(divide_positive_content(d));
  while (true) {
    const IntPolynomial& a = seq_[seq_.size() - 2];
    const IntPolynomial& b = seq_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree() + 1;
    // prem scales by lc(b)^delta; undo a negative factor so signs are kept.
    if (b.leading() < 0 && delta % 2 != 0) r = negate(r);
    if (r.is_zero()) break;
    seq_.push_back(divide_positive_content(negate(r)));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

unsigned SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (seq_.front().sign_at(lo) == 0 || seq_.front().sign_at(hi) == 0)
    throw EndpointIsRoot("sturm_count: interval endpoint is a root");
  if (!(lo < hi)) return 0;
  return static_cast<unsigned>(variations(lo) - variations(hi));
}

unsigned sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  return SturmSequence(p).count(lo, hi);
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(IntPolynomial defining_poly, Rational lo, Rational hi)
    : poly_(std::move(defining_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.is_zero() || !(lo_ < hi_)) throw std::invalid_argument("AlgebraicReal: bad interval");
  if (sturm_count(poly_, lo_, hi_) != 1)
    throw std::invalid_argument("AlgebraicReal: interval does not isolate exactly one root");
  sqfree_ = std::make_shared<const IntPolynomial>(squarefree_part(poly_));
}

AlgebraicReal::AlgebraicReal(Unchecked, IntPolynomial poly, std::shared_ptr<const IntPolynomial> sqfree,
                             Rational lo, Rational hi)
    : poly_(std::move(poly)), sqfree_(std::move(sqfree)), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  IntPolynomial p({Integer(-r.get_num()), Integer(r.get_den())});
  return AlgebraicReal(std::move(p), r - 1, r + 1);
}

double AlgebraicReal::to_double() const {
  Rational scale = abs(lo_) + 1;
  AlgebraicReal r = refine(*this, scale * pow2(-64));
  Rational mid = (r.lo_ + r.hi_) / 2;
  return mid.get_d();
}

int AlgebraicReal::sign() const {
  if (lo_ >= 0) return 1;
  if (hi_ <= 0) return -1;
  if (poly_.sign_at(Rational(0)) == 0) return 0;
  return sturm_count(poly_, lo_, Rational(0)) == 1 ? -1 : 1;
}

std::string AlgebraicReal::to_string(int digits) const {
  std::ostringstream os;
  os << std::setprecision(digits) << to_double();
  return os.str();
}

AlgebraicReal refine(const AlgebraicReal& a, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
  if (a.width() <= eps) return a;
  const IntPolynomial& s = *a.sqfree_;
  Rational lo = a.lo_, hi = a.hi_;
  const int slo = s.sign_at(lo);
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    const int sm = s.sign_at(mid);
    if (sm == 0) {
      // Rational root hit exactly.
      Rational quarter = std::min(Rational(eps), Rational(hi - lo)) / 4;
      lo = mid - quarter;
      hi = mid + quarter;
      break;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicReal(AlgebraicReal::Unchecked{}, a.poly_, a.sqfree_, lo, hi);
}

AlgebraicReal isolate_largest_real_root(const IntPolynomial& p) {
  if (p.degree() < 1) throw NoRealRoot("isolate_largest_real_root: constant polynomial");
  SturmSequence sturm(p);
  Rational hi = root_bound(p);
  Rational lo = -hi;
  if (sturm.count(lo, hi) == 0) throw NoRealRoot("polynomial " + p.to_string() + " has no real root");
  while (sturm.count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    Rational nudge = (hi - lo) / 1024;
    while (p.sign_at(mid) == 0) mid += nudge;
    if (sturm.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return refine(AlgebraicReal(p, lo, hi), pow2(-64));
}

bool equal(const AlgebraicReal& a, const AlgebraicReal& b) {
  Rational lo = std::max(a.lo(), b.lo());
  Rational hi = std::min(a.hi(), b.hi());
  if (!(lo < hi)) return false;
  IntPolynomial g = gcd(a.defining_poly(), b.defining_poly());
  if (g.degree() < 1) return false;
  return sturm_count(g, lo, hi) > 0;
}

int compare(const AlgebraicReal& a0, const AlgebraicReal& b0) {
  if (equal(a0, b0)) return 0;
  AlgebraicReal a = a0, b = b0;
  while (true) {
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    a = refine(a, a.width() / 2);
    b = refine(b, b.width() / 2);
  }
}

// ---------------------------------------------------------------------------
// Minimal polynomials

namespace {

struct RootUnit {
  std::vector<std::size_t> members;  // one real root or a conjugate pair
};

// Enumerates subsets of `units` with total degree `budget`, calling `visit`
// until it returns true.
bool enumerate_units(const std::vector<RootUnit>& units, std::size_t start, int budget,
                     std::vector<std::size_t>& chosen, const std::function<bool()>& visit) {
  if (budget == 0) return visit();
  for (std::size_t u = start; u < units.size(); ++u) {
    const int deg = static_cast<int>(units[u].members.size());
    if (deg > budget) continue;
    for (auto m : units[u].members) chosen.push_back(m);
    bool done = enumerate_units(units, u + 1, budget - deg, chosen, visit);
    for (std::size_t k = 0; k < units[u].members.size(); ++k) chosen.pop_back();
    if (done) return true;
  }
  return false;
}

}  // namespace

IntPolynomial min_poly_of(const AlgebraicReal& a, unsigned precision_bits) {
  IntPolynomial sf = squarefree_part(a.defining_poly());
  if (sf.degree() <= 1) return sf;
  const int n = sf.degree();
  AlgebraicReal narrow = refine(a, pow2(-80) * (abs(a.lo()) + 1));
  const double target_value = Rational((narrow.lo() + narrow.hi()) / 2).get_d();

  for (unsigned bits = std::max(precision_bits, 64u); bits <= kMaxPrecisionBits; bits *= 2) {
    ComplexRootSet roots(sf, bits);
    if (!roots.converged()) continue;

    std::size_t target = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      double dist = std::hypot(roots[i].re - target_value, roots[i].im);
      if (dist < best) {
        best = dist;
        target = i;
      }
    }

    // Group the remaining roots into real singletons and conjugate pairs.
    std::vector<RootUnit> units;
    std::vector<bool> used(roots.size(), false);
    used[target] = true;
    bool pairing_ok = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      const auto& r = roots[i];
      if (std::abs(r.im) <= std::max(r.radius, 1e-30)) {
        used[i] = true;
        units.push_back({{i}});
        continue;
      }
      std::size_t mate = roots.size();
      double mate_dist = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j] || j == i) continue;
        double dist = std::hypot(roots[j].re - r.re, roots[j].im + r.im);
        if (dist < mate_dist) {
          mate_dist = dist;
          mate = j;
        }
      }
      if (mate == roots.size()) {
        pairing_ok = false;
        break;
      }
      used[i] = used[mate] = true;
      units.push_back({{i, mate}});
    }
    if (!pairing_ok) continue;

    IntPolynomial found;
    for (int degree = 1; degree < n && found.is_zero(); ++degree) {
      std::vector<std::size_t> chosen{target};
      enumerate_units(units, 0, degree - 1, chosen, [&]() {
        std::vector<Integer> coeffs;
        if (!roots.rounded_factor(chosen, coeffs)) return false;
        IntPolynomial cand = IntPolynomial(std::move(coeffs)).primitive_part();
        if (cand.degree() != degree || !divides(cand, sf)) return false;
        if (sturm_count(cand, a.lo(), a.hi()) != 1) return false;
        found = cand;
        return true;
      });
    }
    if (!found.is_zero()) return found;
    // No proper factor vanishes at a: the squarefree part is irreducible
    // provided every proper candidate was representable, which holds once
    // the root set is certified.
    if (roots.disjoint()) return sf;
  }
  throw PrecisionExhausted("min_poly_of: no verified candidate for " + a.defining_poly().to_string());
}

PisotUnitInfo pisot_unit_check(const IntPolynomial& m, unsigned precision_bits) {
  if (m.degree() < 1) throw std::invalid_argument("pisot_unit_check: constant polynomial");
  if (abs(m.leading()) != 1) throw std::invalid_argument("pisot_unit_check: polynomial is not monic");
  PisotUnitInfo info;
  info.is_unit = abs(m.coeff(0)) == 1;
  if (m.degree() == 1) {
    info.is_pisot = true;
    return info;
  }
  for (unsigned bits = std::max(precision_bits, 64u); bits <= kMaxPrecisionBits; bits *= 2) {
    ComplexRootSet roots(m, bits);
    if (!roots.converged() || !roots.disjoint()) continue;
    double worst = 0;
    for (const auto& r : roots.roots()) worst = std::max(worst, r.radius);
    if (worst > 1e-10) continue;

    std::size_t largest = roots.size();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (std::abs(roots[i].im) > roots[i].radius) continue;
      if (largest == roots.size() || roots[i].re > roots[largest].re) largest = i;
    }
    if (largest == roots.size()) throw NoRealRoot("pisot_unit_check: no real root");
    info.is_pisot = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i == largest) continue;
      const auto& r = roots[i];
      const double err = r.radius + 4 * std::numeric_limits<double>::epsilon() * (r.modulus + 1);
      if (std::abs(r.im) > r.radius) ++info.complex_conjugates;
      if (std::abs(r.modulus - 1.0) <= err)
        throw BoundaryCase("pisot_unit_check: conjugate modulus indistinguishable from 1 for " + m.to_string());
      if (r.modulus > 1.0) info.is_pisot = false;
      info.conjugate_moduli.push_back({r.modulus, err});
    }
    std::sort(info.conjugate_moduli.begin(), info.conjugate_moduli.end(),
              [](const ConjugateModulus& x, const ConjugateModulus& y) { return x.modulus > y.modulus; });
    return info;
  }
  throw PrecisionExhausted("pisot_unit_check: roots of " + m.to_string() + " could not be certified");
}

}  // namespace osd

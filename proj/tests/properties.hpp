// Randomized property suites shared by the unit tests and the acceptance
// binary. Each suite returns the number of failing cases and a note on the
// first failure.
#ifndef OSD_TESTS_PROPERTIES_HPP
#define OSD_TESTS_PROPERTIES_HPP

#include "osd/algebraic.hpp"
#include "osd/field.hpp"
#include "osd/rule.hpp"
#include "osd/spectral.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace props {

using osd::Integer;
using osd::IntPolynomial;
using osd::Rational;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

inline Rational random_rational(std::mt19937& rng, int num, int den) {
  std::uniform_int_distribution<int> p(-num, num), q(1, den);
  Rational r(p(rng), q(rng));
  r.canonicalize();
  return r;
}

inline IntPolynomial linear(const Rational& r) {
  // q x - p for r = p/q
  return IntPolynomial({Integer(-r.get_num()), Integer(r.get_den())});
}

/// Sturm counts against polynomials built from known rational roots, an
/// optional root-free quadratic and optional repeated factors.
inline Outcome sturm_suite(int n, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int c = 0; c < n; ++c) {
    ++out.cases;
    std::vector<Rational> roots;
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    while (static_cast<int>(roots.size()) < k) {
      Rational r = random_rational(rng, 20, 4);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    IntPolynomial p = IntPolynomial::descending({1});
    for (const auto& r : roots) p = p * linear(r);
    if (rng() % 2) p = p * IntPolynomial::descending({1, 0, std::uniform_int_distribution<long>(1, 5)(rng)});
    if (rng() % 3 == 0) p = p * linear(roots.front());
    Rational lo, hi;
    do {
      lo = random_rational(rng, 25, 7);
      hi = random_rational(rng, 25, 7);
    } while (lo == hi || std::find(roots.begin(), roots.end(), lo) != roots.end() ||
             std::find(roots.begin(), roots.end(), hi) != roots.end());
    if (hi < lo) std::swap(lo, hi);
    const auto expected =
        static_cast<unsigned>(std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return lo < r && r < hi; }));
    const unsigned got = osd::sturm_count(p, lo, hi);
    if (got != expected)
      out.fail("p=" + p.to_string() + " on (" + lo.get_str() + "," + hi.get_str() + "): got " + std::to_string(got) +
               ", expected " + std::to_string(expected));
  }
  return out;
}

inline osd::IntMatrix random_primitive(std::mt19937& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> e(0, max_entry);
  while (true) {
    osd::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    if (osd::is_primitive(m)) return m;
  }
}

using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<300>,
                                          boost::multiprecision::et_off>;

inline Big eval_big(const IntPolynomial& p, const Big& x) {
  Big acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + Big(c[k].get_str());
  return acc;
}

/// Largest real root by Newton from a double start, in 300-bit floats.
inline Big newton_root(const IntPolynomial& p, double start) {
  const IntPolynomial dp = p.derivative();
  Big x = start;
  for (int it = 0; it < 200; ++it) {
    Big step = eval_big(p, x) / eval_big(dp, x);
    x -= step;
    if (abs(step) < Big("1e-85")) break;
  }
  return x;
}

/// field_is_zero against a 300-bit evaluation at the Perron root. Half of
/// the elements are multiples of the minimal polynomial.
inline Outcome field_zero_suite(int n, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int c = 0; c < n; ++c) {
    ++out.cases;
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    osd::IntMatrix m = random_primitive(rng, dim, 2);
    IntPolynomial cp = osd::char_poly(m);
    osd::AlgebraicReal lambda = osd::isolate_largest_real_root(cp);
    IntPolynomial minp = osd::min_poly_of(lambda);
    auto ctx = std::make_shared<osd::FieldContext>(cp, lambda);
    std::vector<Rational> q;
    const bool make_zero = rng() % 2 == 0;
    if (make_zero) {
      std::vector<Rational> r;
      const int rd = std::uniform_int_distribution<int>(0, std::max(0, cp.degree() - minp.degree()))(rng);
      for (int k = 0; k <= rd; ++k) r.push_back(random_rational(rng, 5, 3));
      q = osd::ratpoly::mul(r, osd::ratpoly::from_int(minp));
    } else {
      for (int k = 0; k < cp.degree(); ++k) q.push_back(random_rational(rng, 5, 3));
    }
    osd::FieldElement e(ctx, q);
    const Big x = newton_root(cp, lambda.to_double());
    Big v = 0;
    const auto& coeffs = e.coefficients();
    for (std::size_t k = coeffs.size(); k-- > 0;)
      v = v * x + Big(coeffs[k].get_num().get_str()) / Big(coeffs[k].get_den().get_str());
    const bool numeric_zero = abs(v) < Big("1e-60");
    const bool exact_zero = osd::field_is_zero(e);
    if (numeric_zero != exact_zero || (make_zero && !exact_zero))
      out.fail("modulus " + cp.to_string() + ": exact " + std::to_string(exact_zero) + ", numeric " +
               std::to_string(numeric_zero));
  }
  return out;
}

/// min_poly_of on products f * g with f from a list of irreducibles: the
/// result must divide the product exactly, vanish at the root, and equal f
/// whenever f vanishes there.
inline Outcome min_poly_suite(int n, unsigned seed) {
  static const std::vector<IntPolynomial> irreducible = {
      IntPolynomial::descending({1, -1, -1}),     IntPolynomial::descending({1, 0, -2}),
      IntPolynomial::descending({1, 0, -1, -1}),  IntPolynomial::descending({1, -1, -1, -1}),
      IntPolynomial::descending({1, -3, 1}),      IntPolynomial::descending({1, 0, 0, -2}),
      IntPolynomial::descending({1, -2, -1, 1}),  IntPolynomial::descending({1, -4, 1}),
      IntPolynomial::descending({1, 0, 0, 0, -3}), IntPolynomial::descending({2, 0, -3}),
      IntPolynomial::descending({1, -1, -2, 1}),  IntPolynomial::descending({1, -4, 5, -3})};
  std::mt19937 rng(seed);
  Outcome out;
  for (int c = 0; c < n; ++c) {
    ++out.cases;
    const IntPolynomial& f = irreducible[rng() % irreducible.size()];
    IntPolynomial g;
    do {
      const int deg = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<Integer> co;
      for (int k = 0; k <= deg; ++k) co.push_back(std::uniform_int_distribution<int>(-4, 4)(rng));
      if (co.back() == 0) co.back() = 1;
      g = IntPolynomial(co);
    } while (g.degree() < 1);
    const IntPolynomial p = f * g;
    osd::AlgebraicReal a = [&] {
      try {
        return osd::isolate_largest_real_root(p);
      } catch (const std::exception&) {
        return osd::isolate_largest_real_root(f);
      }
    }();
    const IntPolynomial m = osd::min_poly_of(a);
    const osd::AlgebraicReal r = osd::refine(a, Rational(1, 1 << 30));
    bool ok = osd::divides(m, a.defining_poly()) && m.leading() > 0 && m.content() == 1 &&
              osd::sturm_count(m, r.lo(), r.hi()) == 1;
    if (ok && osd::sturm_count(osd::gcd(f, a.defining_poly()), r.lo(), r.hi()) == 1 && a.defining_poly() == p)
      ok = m == f.primitive_part();
    if (!ok) out.fail("p=" + a.defining_poly().to_string() + " gave " + m.to_string());
  }
  return out;
}

/// sum_i M(i, j) L_i = lambda L_j exactly for random primitive rules.
inline Outcome length_suite(int n, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int c = 0; c < n; ++c) {
    ++out.cases;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<osd::Word> images;
    osd::SubstitutionRule rule(osd::Alphabet(names), std::vector<osd::Word>(k, osd::Word{0}));
    do {
      images.clear();
      for (std::size_t i = 0; i < k; ++i) {
        osd::Word w(std::uniform_int_distribution<std::size_t>(1, 4)(rng));
        for (auto& l : w) l = static_cast<osd::Letter>(rng() % k);
        images.push_back(w);
      }
      rule = osd::SubstitutionRule(osd::Alphabet(names), images);
    } while (!osd::is_primitive(osd::inflation_matrix(rule)));
    const osd::InflationData d = osd::pf_data(rule);
    const osd::FieldElement x = osd::FieldElement::generator(d.field);
    for (std::size_t j = 0; j < k; ++j) {
      const osd::FieldElement lhs = osd::word_length(rule.image(static_cast<osd::Letter>(j)), d.lengths);
      if (!osd::field_equal(lhs, x * d.lengths[j])) {
        out.fail("rule with char poly " + d.char_poly.to_string() + ", letter " + names[j]);
        break;
      }
    }
  }
  return out;
}

}  // namespace props

#endif  // OSD_TESTS_PROPERTIES_HPP

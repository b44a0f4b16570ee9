#include "doctest.h"
#include "osd/error.hpp"
#include "osd/osd.hpp"

#include <cmath>

using namespace osd;
using P = IntPolynomial;

namespace {
AlgebraicReal root(P p) { return isolate_largest_real_root(p); }
const double kPhi = (1 + std::sqrt(5.0)) / 2;
}  // namespace

TEST_CASE("Lyapunov exponents") {
  auto e = lyapunov(root(P::descending({1, -1, -1})), AlgebraicReal::from_rational(1), AlgebraicReal::from_rational(1));
  CHECK(e.max == doctest::Approx(-std::log(kPhi)));
  auto e2 = lyapunov(root(P::descending({1, -3, 1})), root(P::descending({1, -2, -1})), std::nullopt);
  CHECK(e2.max == doctest::Approx(std::log(1 + std::sqrt(2.0)) - 2 * std::log(kPhi)));
  CHECK(e2.max == doctest::Approx(-0.0812).epsilon(0.01));
  auto e3 = lyapunov(AlgebraicReal::from_rational(2), AlgebraicReal::from_rational(2), std::nullopt);
  CHECK(e3.max == 0.0);
}

TEST_CASE("osd from spectral reports") {
  SpectralReport fib = spectral_report(IntMatrix{{1}});
  OsdResult r = osd::osd(root(P::descending({1, -1, -1})), 1, fib, true);
  CHECK(r.exact);
  CHECK(*r.value == 1.0);
  OsdResult inf = osd::osd(root(P::descending({1, -1, -1})), 1, fib, false);
  CHECK(inf.infinite());
  CHECK_FALSE(inf.value);

  SpectralReport nil = spectral_report(IntMatrix{{0}});
  OsdResult c = osd::osd(root(P::descending({1, -1, -1})), 1, nil, true);
  CHECK(c.clamped);
  CHECK(*c.value == 1.0);

  // non-uniform: radii 2 and 1 against lambda = 3
  SpectralReport two = spectral_report(IntMatrix{{2, 0}, {1, 1}});
  OsdResult b = osd::osd(AlgebraicReal::from_rational(3), 1, two, true);
  CHECK_FALSE(b.exact);
  CHECK(b.hi == doctest::Approx(std::log(3.0) / (std::log(3.0) - std::log(2.0))));
  CHECK(b.lo == 1.0);
  CHECK(b.lo <= b.hi);
}

TEST_CASE("osd formula") {
  CHECK(osd_formula(std::log(kPhi * kPhi), std::log(1 + std::sqrt(2.0)), 1) == doctest::Approx(11.874434).epsilon(1e-7));
  CHECK(osd_formula(1.0, 0.0, 1) == 1.0);
  // strictly increasing in lambda_dc
  double prev = 1.0;
  for (int k = 1; k < 50; ++k) {
    const double v = osd_formula(std::log(3.0), std::log(1.0 + 2.0 * k / 50.0), 1);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("window report") {
  AlgebraicReal lambda = root(P::descending({1, -3, 1}));
  AlgebraicReal ldc = root(P::descending({1, -2, -1}));
  PisotUnitInfo pu = pisot_unit_check(P::descending({1, -3, 1}));
  OsdResult r;
  r.value = osd_formula(std::log(lambda.to_double()), std::log(ldc.to_double()), 1);
  r.lo = r.hi = *r.value;
  WindowReport w = window_report(lambda, ldc, 1, P::descending({1, -3, 1}), pu, r);
  CHECK(w.applicable);
  CHECK(w.d_int == 1);
  CHECK(*w.boundary_dim == doctest::Approx(0.915785).epsilon(1e-6));
  // OSD = d_int / (d_int - boundary_dim)
  CHECK(w.d_int / (w.d_int - *w.boundary_dim) == doctest::Approx(*r.value).epsilon(1e-9));
  CHECK(w.lower_bound <= *w.boundary_dim + 1e-12);
  CHECK(*w.boundary_dim <= *w.naive_upper_bound + 1e-12);

  // three real conjugates: not isotropic
  PisotUnitInfo t = pisot_unit_check(P::descending({1, -2, -1, 1}));
  WindowReport nw = window_report(root(P::descending({1, -2, -1, 1})), root(P::descending({1, -1, -2, 1})), 1,
                                  P::descending({1, -2, -1, 1}), t, r);
  CHECK_FALSE(nw.applicable);
  CHECK(nw.d_int == 2);
  CHECK_FALSE(nw.boundary_dim);
}

TEST_CASE("product and formula-level OSD") {
  OsdResult one;
  one.value = 1.0;
  OsdResult rf;
  rf.value = 11.874434;
  rf.lo = rf.hi = 11.874434;
  CHECK(*product_osd({one, rf}).value == doctest::Approx(12.874434));
  CHECK(*product_osd({one, one}).value == 2.0);
  CHECK(*product_osd({rf}).value == *rf.value);
  CHECK(*product_osd({one, rf}).value == *product_osd({rf, one}).value);
  OsdResult bounds;
  bounds.exact = false;
  CHECK_THROWS_AS(product_osd({one, bounds}), NonExactFactor);
  OsdResult inf;
  inf.pure_point = false;
  CHECK_THROWS_AS(product_osd({one, inf}), NonExactFactor);

  const P golden = P::descending({1, -1, -1});
  CHECK(*osd_from_data(golden, P::descending({1, -4, 5, -3}), 2).value == doctest::Approx(16.040).epsilon(1e-3));
  CHECK(*osd_from_data(golden, P::descending({1, -2, -1, 2, 1, -4}), 2).value == doctest::Approx(4.559).epsilon(1e-3));
  CHECK(*osd_from_data(P::descending({1, -3, 1}), P::descending({1, -4, 1}), 2).value ==
        doctest::Approx(3.166443).epsilon(1e-6));
  CHECK_THROWS_AS(osd_from_data(golden, P::descending({1, -2}), 1), InvalidSpectrum);
}

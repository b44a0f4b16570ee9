#include "osd/osd.hpp"

#include "osd/error.hpp"

#include <cmath>
#include <stdexcept>

namespace osd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double exact_log(const AlgebraicReal& a) {
  if (a.sign() == 0) return -kInf;
  if (equal(a, AlgebraicReal::from_rational(1))) return 0.0;
  return std::log(a.to_double());
}

}  // namespace

LyapunovExponents lyapunov(const AlgebraicReal& lambda, const AlgebraicReal& lambda_dc,
                           const std::optional<AlgebraicReal>& min_recurrent_lambda, int d) {
  if (d < 1) throw std::invalid_argument("lyapunov: d must be >= 1");
  const double dl = d * exact_log(lambda);
  LyapunovExponents e;
  e.max = exact_log(lambda_dc) - dl;
  e.min_lower_bound = min_recurrent_lambda ? exact_log(*min_recurrent_lambda) - dl : -kInf;
  return e;
}

double osd_formula(double log_lambda, double log_lambda_dc, int d) {
  if (log_lambda_dc == 0.0) return 1.0;
  const double dl = d * log_lambda;
  if (log_lambda_dc >= dl) return kInf;
  return dl / (dl - log_lambda_dc);
}

OsdResult osd(const AlgebraicReal& lambda, int d, const SpectralReport& spectral, bool pure_point) {
  if (compare(lambda, AlgebraicReal::from_rational(1)) <= 0) throw std::invalid_argument("osd: lambda must exceed 1");
  OsdResult r;
  const LyapunovExponents lyap = lyapunov(lambda, spectral.lambda_dc, spectral.min_recurrent_lambda, d);
  r.lyapunov_max = lyap.max;
  r.lyapunov_min_lower_bound = lyap.min_lower_bound;
  r.pure_point = pure_point;
  if (!pure_point) {
    r.exact = false;
    r.lo = r.hi = kInf;
    return r;
  }
  if (spectral.nilpotent) {
    r.value = 1.0;
    r.clamped = true;
    return r;
  }
  const double ll = exact_log(lambda);
  r.hi = osd_formula(ll, exact_log(spectral.lambda_dc), d);
  if (spectral.uniform || spectral.dc_primitive) {
    r.lo = r.hi;
    r.value = r.hi;
  } else {
    r.exact = false;
    r.lo = std::max(1.0, osd_formula(ll, exact_log(*spectral.min_recurrent_lambda), d));
  }
  return r;
}

double boundary_dimension(double log_lambda, double log_lambda_dc, int d, int d_int) {
  return static_cast<double>(d_int) / d * log_lambda_dc / log_lambda;
}

WindowReport window_report(const AlgebraicReal& lambda, const AlgebraicReal& lambda_dc, int d,
                           const IntPolynomial& min_poly_lambda, const PisotUnitInfo& pu, const OsdResult& result) {
  WindowReport w;
  const int deg = min_poly_lambda.degree();
  w.d_int = d * (deg - 1);
  w.isotropic = deg == 2 || (deg == 3 && pu.complex_conjugates == 2);
  w.applicable = d == 1 && w.isotropic && pu.is_pisot && pu.is_unit && result.pure_point && result.exact &&
                 !result.clamped && !result.infinite();
  const double ll = exact_log(lambda);
  const double ldc = exact_log(lambda_dc);
  if (w.applicable) w.boundary_dim = boundary_dimension(ll, ldc, d, w.d_int);
  if (result.infinite())
    w.lower_bound = w.d_int;
  else {
    const double v = result.value.value_or(result.lo);
    w.lower_bound = w.d_int * (v - 1) / v;
  }
  if (deg >= 2 && !pu.conjugate_moduli.empty() && std::isfinite(ldc)) {
    const double rc = pu.conjugate_moduli.front().modulus;
    if (rc > 0 && rc < 1) w.naive_upper_bound = ldc / (-std::log(rc));
  }
  return w;
}

OsdResult product_osd(const std::vector<OsdResult>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_osd: no factors");
  OsdResult r;
  double sum = 0;
  r.lyapunov_max = -kInf;
  r.lyapunov_min_lower_bound = kInf;
  for (const auto& f : factors) {
    if (!f.pure_point || !f.exact || !f.value || f.infinite())
      throw NonExactFactor("product factor has no exact finite OSD");
    sum += *f.value;
    r.lyapunov_max = std::max(r.lyapunov_max, f.lyapunov_max);
    r.lyapunov_min_lower_bound = std::min(r.lyapunov_min_lower_bound, f.lyapunov_min_lower_bound);
  }
  r.value = sum;
  r.lo = r.hi = sum;
  return r;
}

OsdResult osd_from_data(const IntPolynomial& lambda_poly, const IntPolynomial& lambda_dc_poly, int d) {
  if (d < 1) throw InvalidSpectrum("dimension must be >= 1");
  AlgebraicReal lambda = isolate_largest_real_root(lambda_poly);
  AlgebraicReal lambda_dc = isolate_largest_real_root(lambda_dc_poly);
  const AlgebraicReal one = AlgebraicReal::from_rational(1);
  if (compare(lambda, one) <= 0) throw InvalidSpectrum("lambda must exceed 1");
  if (compare(lambda_dc, one) < 0) throw InvalidSpectrum("lambda_dc must be at least 1");
  const double ll = exact_log(lambda);
  const double ldc = exact_log(lambda_dc);
  if (ldc >= d * ll) throw InvalidSpectrum("lambda_dc must be smaller than lambda^d");
  OsdResult r;
  r.value = osd_formula(ll, ldc, d);
  r.lo = r.hi = *r.value;
  r.lyapunov_max = r.lyapunov_min_lower_bound = ldc - d * ll;
  return r;
}

}  // namespace osd

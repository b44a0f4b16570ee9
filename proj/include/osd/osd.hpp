#ifndef OSD_OSD_HPP
#define OSD_OSD_HPP

#include "osd/algebraic.hpp"
#include "osd/spectral.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace osd {

struct LyapunovExponents {
  /// log(lambda_dc) - d log(lambda); -infinity when lambda_dc = 0.
  double max = 0;
  /// min over recurrent lambda_i of log(lambda_i) - d log(lambda).
  double min_lower_bound = 0;
};

LyapunovExponents lyapunov(const AlgebraicReal& lambda, const AlgebraicReal& lambda_dc,
                           const std::optional<AlgebraicReal>& min_recurrent_lambda, int d = 1);

/// Orbit separation dimension. When not pure point the value is infinite
/// and lo = hi = +infinity.
struct OsdResult {
  bool pure_point = true;
  bool exact = true;
  std::optional<double> value;
  double lo = 1;
  double hi = 1;
  double lyapunov_max = 0;
  double lyapunov_min_lower_bound = 0;
  /// Set when M_dc is nilpotent and the value was fixed at 1.
  bool clamped = false;

  bool infinite() const { return !pure_point || !(hi < std::numeric_limits<double>::infinity()); }
};

/// d log(lambda) / (d log(lambda) - log(lambda_dc)), as doubles.
double osd_formula(double log_lambda, double log_lambda_dc, int d);

OsdResult osd(const AlgebraicReal& lambda, int d, const SpectralReport& spectral, bool pure_point);

struct WindowReport {
  int d_int = 0;
  bool isotropic = false;
  bool applicable = false;
  std::optional<double> boundary_dim;
  double lower_bound = 0;
  std::optional<double> naive_upper_bound;
};

/// (d_int / d) log(lambda_dc) / log(lambda).
double boundary_dimension(double log_lambda, double log_lambda_dc, int d, int d_int);

/// Internal-space classification from the minimal polynomial of lambda
/// (one-dimensional tilings). The boundary dimension is reported only for
/// Pisot units with isotropic contraction and an exact OSD.
WindowReport window_report(const AlgebraicReal& lambda, const AlgebraicReal& lambda_dc, int d,
                           const IntPolynomial& min_poly_lambda, const PisotUnitInfo& pisot_unit,
                           const OsdResult& result);

/// Sum of exact finite factor values. Throws NonExactFactor.
OsdResult product_osd(const std::vector<OsdResult>& factors);

/// OSD from externally supplied spectra: lambda and lambda_dc are the
/// largest real roots. Throws InvalidSpectrum unless 1 <= lambda_dc <
/// lambda^d and lambda > 1.
OsdResult osd_from_data(const IntPolynomial& lambda_poly, const IntPolynomial& lambda_dc_poly, int d);

}  // namespace osd

#endif  // OSD_OSD_HPP

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqz/oat.hpp"
#include "sqz/params.hpp"

namespace sqz {

/// One sweep sample: observable value at control-parameter distance delta.
struct SweepRecord {
  double xi = 0.0;
  double delta = 0.0;
  std::optional<double> psi;
  std::string observable;
  double value = 0.0;
  PhaseLabel side = PhaseLabel::ordered;
};

enum class FitModel { powerlaw, affine_square };

/// Fit result. For powerlaw: value = amplitude * delta^exponent; for
/// affine_square: value^2 = u + v * delta. residual_norm is the RMS residual
/// in the fit space (log-log for powerlaw, linear for affine_square).
struct ScalingFit {
  FitModel model = FitModel::powerlaw;
  double exponent = 0.0;
  double amplitude = 0.0;
  double u = 0.0;
  double v = 0.0;
  double residual_norm = 0.0;
  double r_squared = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  PhaseLabel side = PhaseLabel::ordered;
  bool span_warning = false;  // powerlaw window spans < 2 decades
  bool u_clamped = false;     // tiny negative intercept clamped to 0
};

/// Ordinary least squares on (log delta, log value). Requires >= 5 records
/// on a single side with positive values; flags span_warning when the delta
/// window covers less than two decades.
ScalingFit fit_powerlaw(std::span<const SweepRecord> records);

/// Linear least squares of value^2 against delta; u is clamped at 0 (with
/// a flag) when the fitted intercept comes out slightly negative.
ScalingFit fit_affine_square(std::span<const SweepRecord> records);

struct MinimumEstimate {
  double value = 0.0;
  double t_at = 0.0;
  bool at_boundary = false;
};

/// Mean spacing of successive zeta minima, each refined by a three-point
/// parabola. Throws InsufficientSpan with fewer than two interior minima.
double extract_period(std::span<const double> times, std::span<const double> zeta);
double extract_period(const QuadratureTrace& trace);

/// Global minimum with parabolic refinement; at_boundary marks an endpoint
/// minimum (monotone trace).
MinimumEstimate extract_zeta_min(std::span<const double> times, std::span<const double> zeta);
MinimumEstimate extract_zeta_min(const QuadratureTrace& trace);

}  // namespace sqz

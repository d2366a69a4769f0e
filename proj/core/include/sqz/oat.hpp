#pragma once

#include <span>
#include <vector>

#include "sqz/params.hpp"

namespace sqz {

/// Quadratic-Hamiltonian coefficients of the bosonised OAT model,
/// non-dimensionalised by 2*kappa*J. c3 is the extensive constant and does
/// not affect the dynamics.
struct OatBosonCoeffs {
  double c1;
  double c2;
  double c3;
};

/// Bogoliubov angle, mode frequency and squeezing period of the single
/// bosonic mode. omega_a is in units of 2*kappa*J, period in 1/(2*kappa*J).
struct OatMode {
  double theta_a;
  double omega_a;
  double period;
};

struct Quadratures {
  double a, b, c;
};

/// Squeezing parameter and minimising quadrature angle at one time.
/// degenerate marks t with A = B = 0 (t = 0), where phi_min is undefined
/// and reported as 0 by convention.
struct SqueezingPoint {
  double zeta;
  double phi_min;
  bool degenerate;
};

/// Time series of the quadrature parameters, the squeezing parameter and
/// its minimising angle. Times in 1/(2*kappa*J).
struct QuadratureTrace {
  std::vector<double> times;
  std::vector<double> a_vals;
  std::vector<double> b_vals;
  std::vector<double> c_vals;
  std::vector<double> zeta;
  std::vector<double> phi_min;
};

/// c1, c2, c3 with the mean-field rotation angle substituted per phase
/// (ordered: cos(theta) = xi; disordered: theta = 0).
/// Throws CriticalSingularity at delta = 0.
OatBosonCoeffs oat_boson_coefficients(const OatParams& p, const Phase& phase);

/// theta_a from tanh(4 theta_a) = 2 c2 / c1.
/// Throws CriticalSingularity when |2 c2 / c1| >= 1.
double oat_bogoliubov_angle(const OatBosonCoeffs& c);

/// sqrt(delta (2 - delta)) ordered, sqrt(delta (1 + delta)) disordered;
/// 0 exactly at the critical point (legal, the downstream period is then
/// infinite and flagged where it matters).
double oat_mode_frequency(const OatParams& p, const Phase& phase);

/// Angle/frequency/period bundle. Throws CriticalSingularity at delta = 0.
OatMode oat_mode(const OatParams& p, const Phase& phase);

/// Squeezing oscillation period T = pi / omega_a.
double oat_squeezing_period(const OatParams& p, const Phase& phase);

/// Quadrature parameters A, B, C at time t (units 1/(2*kappa*J)).
Quadratures oat_abc(const OatParams& p, const Phase& phase, double t);

/// zeta_s(t) via the cancellation-free form, and the minimising angle
/// phi_min = pi/2 + atan2(B, A)/2 mapped to [0, pi).
SqueezingPoint oat_zeta(const OatParams& p, const Phase& phase, double t);

/// Near-critical series around the half-period, truncated after the
/// tau^0, tau^2, tau^4 or tau^6 term (order 0..3). Leading-order asymptotics
/// valid for small delta (documented validity delta <= 0.05); returned
/// regardless, the caller judges applicability.
double oat_series_zeta(PhaseLabel side, double delta, double tau, int order);

/// Full trace over a monotone time grid.
QuadratureTrace oat_timeseries(const OatParams& p, const Phase& phase,
                               std::span<const double> t_grid);

}  // namespace sqz

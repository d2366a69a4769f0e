#pragma once

#include <span>
#include <vector>

#include "sqz/oat.hpp"
#include "sqz/params.hpp"

namespace sqz {

/// Coefficients of the two-mode quadratic Hamiltonian, in units of g.
/// e0 is the extensive mean-field constant.
struct DickeBosonCoeffs {
  double omega;          // photon energy
  double epsilon_tilde;  // spin-deviation energy
  double gamma;          // bilinear coupling
  double e0;
};

/// The four Bogoliubov angles, the intermediate frequencies and the
/// polariton frequencies (units of g, Omega_a > Omega_b >= 0).
struct DickeBogoliubov {
  double phi1, phi2, phi_a, phi_b;
  double omega_a_mid, omega_b_mid;
  double omega_a, omega_b;
};

enum class QuadMode { spin, photon };

struct QuadBlock {
  std::vector<double> a_vals, b_vals, c_vals, zeta, phi_min;
};

/// Spin and photon traces on a shared time grid (times in 1/g).
struct DickeQuadratureTrace {
  std::vector<double> times;
  QuadBlock spin;
  QuadBlock photon;
};

/// Phase-dependent coefficients: normal (xi >= 1): eps~ = eps, gamma = g/2,
/// e0 = -eps N / 2; superradiant: eps~ = g^2/omega, gamma = eps omega/(2g),
/// e0 = -(N g^2 / 4 omega)(1 + xi^2).
DickeBosonCoeffs dicke_boson_coefficients(const DickeParams& p, const Phase& phase);

/// Full angle/frequency set. Throws CriticalSingularity at xi = 1 where the
/// soft-mode hyperbolic inversions close.
DickeBogoliubov dicke_bogoliubov(const DickeBosonCoeffs& c);

/// Leading soft-mode asymptotics: Omega_b ~ g sqrt(delta / (2 cosh psi))
/// (normal) and g sqrt(delta / cosh psi) (superradiant).
double dicke_soft_mode_leading(const DickeParams& p, const Phase& phase);

/// Quadrature parameters at time t, evaluated in double precision.
Quadratures dicke_abc_spin(const DickeParams& p, const Phase& phase, double t);
Quadratures dicke_abc_photon(const DickeParams& p, const Phase& phase, double t);
/// Photon parameters via the a<->b exchange rule applied to the spin
/// implementation; must agree with dicke_abc_photon to 1e-12.
Quadratures dicke_abc_photon_exchanged(const DickeParams& p, const Phase& phase, double t);

/// zeta and minimising angle for the chosen mode. The evaluation switches
/// to ~50-digit software arithmetic when the hyperbolic amplification
/// max(cosh 4phi_a, cosh 4phi_b, cosh 2phi2)^2 exceeds 1e6, where double
/// precision can no longer resolve C - sqrt(A^2 + B^2).
SqueezingPoint dicke_zeta(const DickeParams& p, const Phase& phase, double t, QuadMode which);

/// Beat window max(2 pi / Omega_b, 2 pi / (Omega_a - Omega_b)) bounding one
/// full squeezing cycle of the slow envelope.
double dicke_beat_window(const DickeParams& p, const Phase& phase);

/// Full spin + photon trace over a monotone grid. Precision policy as in
/// dicke_zeta, decided once per trace.
DickeQuadratureTrace dicke_timeseries(const DickeParams& p, const Phase& phase,
                                      std::span<const double> t_grid);

}  // namespace sqz

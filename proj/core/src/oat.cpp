#include "sqz/oat.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sqz/detail/oat_kernels.hpp"
#include "sqz/errors.hpp"

namespace sqz {

namespace {

void require_off_critical(const Phase& phase, const char* who) {
  if (phase.delta == 0.0)
    throw CriticalSingularity(std::string(who) + ": delta = 0, theta_a diverges");
}

double check_xi_consistent(const OatParams& p, const Phase& phase, const char* who) {
  const double xi = p.xi();
  const Phase expect = classify_phase(xi);
  if (expect.label != phase.label)
    throw std::invalid_argument(std::string(who) + ": phase label inconsistent with xi");
  return xi;
}

// phi_min = pi/2 + atan2(B, A)/2, folded into [0, pi)
double minimizing_angle(double a, double b) {
  const double half_pi = std::numbers::pi / 2.0;
  double phi = half_pi + 0.5 * std::atan2(b, a);
  if (phi >= std::numbers::pi) phi -= std::numbers::pi;
  return phi;
}

}  // namespace

OatBosonCoeffs oat_boson_coefficients(const OatParams& p, const Phase& phase) {
  const double xi = check_xi_consistent(p, phase, "oat_boson_coefficients");
  require_off_critical(phase, "oat_boson_coefficients");
  const double j = p.j_spin;
  OatBosonCoeffs c{};
  if (phase.is_ordered()) {
    // cos(theta) = xi
    const double xi2 = xi * xi;
    c.c1 = 1.0 - 0.5 * xi2;
    c.c2 = -0.25 * xi2;
    c.c3 = -j * 0.5 * (1.0 + xi2) - 0.25 * xi2;
  } else {
    // theta = 0
    c.c1 = xi - 0.5;
    c.c2 = -0.25;
    c.c3 = -j * xi - 0.25;
  }
  return c;
}

double oat_bogoliubov_angle(const OatBosonCoeffs& c) {
  const double ratio = 2.0 * c.c2 / c.c1;
  if (!(std::abs(ratio) < 1.0))
    throw CriticalSingularity("oat_bogoliubov_angle: |2 c2/c1| >= 1");
  return 0.25 * std::atanh(ratio);
}

double oat_mode_frequency(const OatParams& p, const Phase& phase) {
  check_xi_consistent(p, phase, "oat_mode_frequency");
  const double d = phase.delta;
  return phase.is_ordered() ? std::sqrt(d * (2.0 - d)) : std::sqrt(d * (1.0 + d));
}

OatMode oat_mode(const OatParams& p, const Phase& phase) {
  require_off_critical(phase, "oat_mode");
  OatMode m{};
  m.theta_a = oat_bogoliubov_angle(oat_boson_coefficients(p, phase));
  m.omega_a = oat_mode_frequency(p, phase);
  m.period = std::numbers::pi / m.omega_a;
  return m;
}

double oat_squeezing_period(const OatParams& p, const Phase& phase) {
  require_off_critical(phase, "oat_squeezing_period");
  return std::numbers::pi / oat_mode_frequency(p, phase);
}

Quadratures oat_abc(const OatParams& p, const Phase& phase, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("oat_abc: t must be >= 0");
  const OatMode m = oat_mode(p, phase);
  const auto q = detail::oat_abc_kernel<double>(m.theta_a, m.omega_a, t);
  return {q.a, q.b, q.c};
}

SqueezingPoint oat_zeta(const OatParams& p, const Phase& phase, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("oat_zeta: t must be >= 0");
  const OatMode m = oat_mode(p, phase);
  SqueezingPoint out{};
  out.zeta = detail::oat_zeta_stable_kernel<double>(m.theta_a, m.omega_a, t);
  const auto q = detail::oat_abc_kernel<double>(m.theta_a, m.omega_a, t);
  if (q.a == 0.0 && q.b == 0.0) {
    out.phi_min = 0.0;
    out.degenerate = true;
  } else {
    out.phi_min = minimizing_angle(q.a, q.b);
    out.degenerate = false;
  }
  return out;
}

double oat_series_zeta(PhaseLabel side, double delta, double tau, int order) {
  if (!(delta > 0.0)) throw std::domain_error("oat_series_zeta: delta must be > 0");
  if (order < 0 || order > 3) throw std::invalid_argument("oat_series_zeta: order in 0..3");
  const double x = delta * tau * tau;
  double bracket = 1.0;
  if (side == PhaseLabel::ordered) {
    if (order >= 1) bracket += x;
    if (order >= 2) bracket += (5.0 / 6.0) * x * x;
    if (order >= 3) bracket += (61.0 / 90.0) * x * x * x;
    return std::sqrt(2.0 * delta) * bracket;
  }
  if (order >= 1) bracket += 0.5 * x;
  if (order >= 2) bracket += (5.0 / 24.0) * x * x;
  if (order >= 3) bracket += (61.0 / 720.0) * x * x * x;
  return std::sqrt(delta) * bracket;
}

QuadratureTrace oat_timeseries(const OatParams& p, const Phase& phase,
                               std::span<const double> t_grid) {
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("oat_timeseries: time grid must be strictly increasing");
  const OatMode m = oat_mode(p, phase);
  QuadratureTrace tr;
  const size_t n = t_grid.size();
  tr.times.assign(t_grid.begin(), t_grid.end());
  tr.a_vals.resize(n);
  tr.b_vals.resize(n);
  tr.c_vals.resize(n);
  tr.zeta.resize(n);
  tr.phi_min.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const auto q = detail::oat_abc_kernel<double>(m.theta_a, m.omega_a, t_grid[i]);
    tr.a_vals[i] = q.a;
    tr.b_vals[i] = q.b;
    tr.c_vals[i] = q.c;
    tr.zeta[i] = detail::oat_zeta_stable_kernel<double>(m.theta_a, m.omega_a, t_grid[i]);
    tr.phi_min[i] = (q.a == 0.0 && q.b == 0.0) ? 0.0 : minimizing_angle(q.a, q.b);
  }
  return tr;
}

}  // namespace sqz

#include "sqz/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sqz/detail/dicke_kernels.hpp"
#include "sqz/detail/extended.hpp"
#include "sqz/errors.hpp"

namespace sqz {

namespace {

void check_phase(const DickeParams& p, const Phase& phase, const char* who) {
  if (classify_phase(p.xi()).label != phase.label)
    throw std::invalid_argument(std::string(who) + ": phase label inconsistent with xi");
}

detail::DickeAngleSet<double> angle_set(const DickeParams& p, const Phase& phase) {
  const auto c = dicke_boson_coefficients(p, phase);
  return detail::make_angle_set<double>(c.omega, c.epsilon_tilde, c.gamma);
}

bool needs_extended(const detail::DickeAngleCache<double>& k) {
  const double amp = std::max({k.cosh4pa, k.cosh4pb, k.cosh2p2});
  return amp * amp > 1e6;
}

double minimizing_angle(double a, double b) {
  double phi = std::numbers::pi / 2.0 + 0.5 * std::atan2(b, a);
  if (phi >= std::numbers::pi) phi -= std::numbers::pi;
  return phi;
}

SqueezingPoint point_from(const detail::Quad<double>& q, double zeta) {
  SqueezingPoint out{};
  out.zeta = zeta;
  if (q.a == 0.0 && q.b == 0.0) {
    out.phi_min = 0.0;
    out.degenerate = true;
  } else {
    out.phi_min = minimizing_angle(q.a, q.b);
    out.degenerate = false;
  }
  return out;
}

// One evaluation pass over the grid in the requested scalar type. The
// angle set is rebuilt from the coefficient doubles so the extended path
// carries no double-rounded intermediates.
template <class Real>
void fill_block(const DickeBosonCoeffs& c, std::span<const double> ts, bool photon,
                QuadBlock& out) {
  const auto rs = detail::make_angle_set<Real>(Real(c.omega), Real(c.epsilon_tilde), Real(c.gamma));
  const auto cache = detail::make_angle_cache(rs);
  const size_t n = ts.size();
  out.a_vals.resize(n);
  out.b_vals.resize(n);
  out.c_vals.resize(n);
  out.zeta.resize(n);
  out.phi_min.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const Real t(ts[i]);
    const auto q = photon ? detail::dicke_abc_photon_kernel(cache, t)
                          : detail::dicke_abc_spin_kernel(cache, t);
    using std::sqrt;
    const Real z = sqrt(detail::zeta_squared(q));
    out.a_vals[i] = static_cast<double>(q.a);
    out.b_vals[i] = static_cast<double>(q.b);
    out.c_vals[i] = static_cast<double>(q.c);
    out.zeta[i] = static_cast<double>(z);
    out.phi_min[i] = (out.a_vals[i] == 0.0 && out.b_vals[i] == 0.0)
                         ? 0.0
                         : minimizing_angle(out.a_vals[i], out.b_vals[i]);
  }
}

}  // namespace

DickeBosonCoeffs dicke_boson_coefficients(const DickeParams& p, const Phase& phase) {
  check_phase(p, phase, "dicke_boson_coefficients");
  const double g = p.g_coupling;
  const double w = p.omega_cavity / g;
  const double e = p.epsilon_atom / g;
  const double xi = p.xi();
  DickeBosonCoeffs c{};
  c.omega = w;
  if (!phase.is_ordered()) {
    c.epsilon_tilde = e;
    c.gamma = 0.5;
    c.e0 = -e * p.n_atoms / 2.0;
  } else {
    c.epsilon_tilde = 1.0 / w;
    c.gamma = e * w / 2.0;
    c.e0 = -(p.n_atoms / (4.0 * w)) * (1.0 + xi * xi);
  }
  return c;
}

DickeBogoliubov dicke_bogoliubov(const DickeBosonCoeffs& c) {
  const auto s = detail::make_angle_set<double>(c.omega, c.epsilon_tilde, c.gamma);
  // gamma > 0 forbids polariton degeneracy
  if (!(s.big_omega_a > s.big_omega_b))
    throw std::logic_error("dicke_bogoliubov: polariton branches degenerate");
  DickeBogoliubov b{};
  b.phi1 = s.phi1;
  b.phi2 = s.phi2;
  b.phi_a = s.phi_a;
  b.phi_b = s.phi_b;
  b.omega_a_mid = s.omega_a_mid;
  b.omega_b_mid = s.omega_b_mid;
  b.omega_a = s.big_omega_a;
  b.omega_b = s.big_omega_b;
  return b;
}

double dicke_soft_mode_leading(const DickeParams& p, const Phase& phase) {
  check_phase(p, phase, "dicke_soft_mode_leading");
  const double ch = std::cosh(p.psi());
  const double d = phase.delta;
  return phase.is_ordered() ? std::sqrt(d / ch) : std::sqrt(d / (2.0 * ch));
}

Quadratures dicke_abc_spin(const DickeParams& p, const Phase& phase, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("dicke_abc_spin: t must be >= 0");
  const auto cache = detail::make_angle_cache(angle_set(p, phase));
  const auto q = detail::dicke_abc_spin_kernel<double>(cache, t);
  return {q.a, q.b, q.c};
}

Quadratures dicke_abc_photon(const DickeParams& p, const Phase& phase, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("dicke_abc_photon: t must be >= 0");
  const auto cache = detail::make_angle_cache(angle_set(p, phase));
  const auto q = detail::dicke_abc_photon_kernel<double>(cache, t);
  return {q.a, q.b, q.c};
}

Quadratures dicke_abc_photon_exchanged(const DickeParams& p, const Phase& phase, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("dicke_abc_photon_exchanged: t must be >= 0");
  const auto cache = detail::exchange_modes(detail::make_angle_cache(angle_set(p, phase)));
  const auto q = detail::dicke_abc_spin_kernel<double>(cache, t);
  return {q.a, q.b, q.c};
}

SqueezingPoint dicke_zeta(const DickeParams& p, const Phase& phase, double t, QuadMode which) {
  if (!(t >= 0.0)) throw std::invalid_argument("dicke_zeta: t must be >= 0");
  const auto coeffs = dicke_boson_coefficients(p, phase);
  const auto cache = detail::make_angle_cache(
      detail::make_angle_set<double>(coeffs.omega, coeffs.epsilon_tilde, coeffs.gamma));
  const bool photon = which == QuadMode::photon;
  const auto qd =
      photon ? detail::dicke_abc_photon_kernel<double>(cache, t)
             : detail::dicke_abc_spin_kernel<double>(cache, t);
  double zeta;
  if (needs_extended(cache)) {
    QuadBlock block;
    const double ts[1] = {t};
    fill_block<Real50>(coeffs, ts, photon, block);
    zeta = block.zeta[0];
  } else {
    zeta = std::sqrt(detail::zeta_squared(qd));
  }
  return point_from(qd, zeta);
}

double dicke_beat_window(const DickeParams& p, const Phase& phase) {
  const auto s = angle_set(p, phase);
  const double two_pi = 2.0 * std::numbers::pi;
  return std::max(two_pi / s.big_omega_b, two_pi / (s.big_omega_a - s.big_omega_b));
}

DickeQuadratureTrace dicke_timeseries(const DickeParams& p, const Phase& phase,
                                      std::span<const double> t_grid) {
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("dicke_timeseries: time grid must be strictly increasing");
  const auto coeffs = dicke_boson_coefficients(p, phase);
  const auto cache = detail::make_angle_cache(
      detail::make_angle_set<double>(coeffs.omega, coeffs.epsilon_tilde, coeffs.gamma));
  DickeQuadratureTrace tr;
  tr.times.assign(t_grid.begin(), t_grid.end());
  if (needs_extended(cache)) {
    fill_block<Real50>(coeffs, t_grid, false, tr.spin);
    fill_block<Real50>(coeffs, t_grid, true, tr.photon);
  } else {
    fill_block<double>(coeffs, t_grid, false, tr.spin);
    fill_block<double>(coeffs, t_grid, true, tr.photon);
  }
  return tr;
}

}  // namespace sqz

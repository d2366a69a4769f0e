#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sqz/errors.hpp"
#include "sqz/params.hpp"

using namespace sqz;

TEST_CASE("phase classification against the critical point") {
  auto ph = classify_phase(0.8);
  CHECK(ph.label == PhaseLabel::ordered);
  CHECK(ph.delta == doctest::Approx(0.2).epsilon(1e-15));

  ph = classify_phase(1.0);
  CHECK(ph.label == PhaseLabel::critical);
  CHECK(ph.delta == 0.0);

  ph = classify_phase(1.2);
  CHECK(ph.label == PhaseLabel::disordered);
  CHECK(ph.delta == doctest::Approx(0.2).epsilon(1e-15));

  CHECK_THROWS_AS(classify_phase(-0.1), std::domain_error);
}

TEST_CASE("oat order parameter branches") {
  const auto m = oat_order_parameter(OatParams::from_xi(0.6));
  CHECK(m.plus == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(m.minus == doctest::Approx(-0.8).epsilon(1e-15));
  CHECK(oat_order_parameter(OatParams::from_xi(1.0)).plus == 0.0);
  CHECK(oat_order_parameter(OatParams::from_xi(2.0)).plus == 0.0);
}

TEST_CASE("oat rotation angle") {
  CHECK(oat_rotation_angle(OatParams::from_xi(0.6)) == doctest::Approx(std::acos(0.6)).epsilon(1e-15));
  CHECK(oat_rotation_angle(OatParams::from_xi(1.0)) == 0.0);
  CHECK(oat_rotation_angle(OatParams::from_xi(1e-300)) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  // cos(theta(xi)) = xi across the ordered phase
  for (int k = 1; k <= 100; ++k) {
    const double xi = k / 100.0;
    CHECK(std::cos(oat_rotation_angle(OatParams::from_xi(xi))) == doctest::Approx(xi).epsilon(1e-14));
  }
}

TEST_CASE("order parameter and angle are continuous at the transition") {
  double prev_m = 1.0, prev_th = 1.0;
  for (int k = 1; k <= 8; ++k) {
    const double h = std::pow(10.0, -k);
    const double m_below = oat_order_parameter(OatParams::from_xi(1.0 - h)).plus;
    const double th_below = oat_rotation_angle(OatParams::from_xi(1.0 - h));
    CHECK(m_below < prev_m);
    CHECK(th_below < prev_th);
    CHECK(oat_order_parameter(OatParams::from_xi(1.0 + h)).plus == 0.0);
    prev_m = m_below;
    prev_th = th_below;
  }
  CHECK(prev_m < 2e-4);
  CHECK(prev_th < 2e-4);
}

TEST_CASE("dicke order parameters") {
  const DickeParams p(1.0, 0.6, 1.0, 100.0);  // xi = 0.6
  const auto d = dicke_order_parameters(p);
  CHECK(d.m_plus == doctest::Approx(40.0).epsilon(1e-14));
  CHECK(d.alpha_plus == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(d.m_minus == doctest::Approx(-40.0).epsilon(1e-14));
  CHECK(d.alpha_minus == doctest::Approx(4.0).epsilon(1e-14));

  const auto at_crit = dicke_order_parameters(DickeParams::from_reduced(1.0, 0.3));
  CHECK(at_crit.m_plus == 0.0);
  CHECK(at_crit.alpha_plus == 0.0);
  CHECK(dicke_order_parameters(DickeParams::from_reduced(1.5, 0.0)).m_plus == 0.0);

  // same m as OAT in units of J = N/2
  const auto oat_m = oat_order_parameter(OatParams::from_xi(0.6));
  CHECK(d.m_plus / p.j_spin() == doctest::Approx(oat_m.plus).epsilon(1e-14));
}

TEST_CASE("detuning conversions") {
  CHECK(delta_to_psi(-0.9) == doctest::Approx(2.944439).epsilon(1e-6));
  CHECK(delta_to_psi(0.0) == 0.0);
  CHECK(psi_to_delta(2.944439) == doctest::Approx(-0.9).epsilon(1e-6));
  CHECK_THROWS_AS(delta_to_psi(1.0), std::domain_error);
  CHECK_THROWS_AS(delta_to_psi(-1.3), std::domain_error);

  // round trip exact to 1e-14 across (-0.99, 0.99)
  for (int k = -98; k <= 98; ++k) {
    const double d = k / 99.0;
    CHECK(psi_to_delta(delta_to_psi(d)) == doctest::Approx(d).epsilon(1e-14));
  }

  // cosh(psi) = (eps/omega + omega/eps) / 2
  const double psi = delta_to_psi(-0.9);
  const double r = 0.1 / 1.9;
  CHECK(std::cosh(psi) == doctest::Approx((r + 1.0 / r) / 2.0).epsilon(1e-13));
}

TEST_CASE("dicke constructor equivalence") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uxi(0.2, 3.0), upsi(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double xi = uxi(rng), psi = upsi(rng);
    const auto a = DickeParams::from_reduced(xi, psi, 50.0);
    const auto b = DickeParams(a.omega_cavity, a.epsilon_atom, a.g_coupling, 50.0);
    CHECK(b.xi() == doctest::Approx(xi).epsilon(1e-14));
    CHECK(b.psi() == doctest::Approx(psi).epsilon(1e-13));
    CHECK(psi_to_delta(b.psi()) == doctest::Approx(a.delta_detune()).epsilon(1e-13));
  }
}

TEST_CASE("phase boundary samples sit on the hyperbola") {
  const auto pts = phase_boundary_samples(0.25, 2.0, 15);
  CHECK(pts.size() == 15);
  CHECK(pts.front().first == doctest::Approx(0.25));
  CHECK(pts.back().first == doctest::Approx(2.0));
  for (const auto& [w, e] : pts) CHECK(w * e == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pts.front().second == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(phase_boundary_samples(-1.0, 2.0, 5), std::domain_error);
  CHECK_THROWS_AS(phase_boundary_samples(0.5, 2.0, 1), std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(OatParams(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(OatParams(1.0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DickeParams(1.0, 0.0, 1.0, 10.0), std::invalid_argument);
}

TEST_CASE("params JSON round trip") {
  const auto p = OatParams::from_xi(1.2, 5.0);
  const auto back = oat_params_from_json(to_json_string(p));
  CHECK(back.kappa == p.kappa);
  CHECK(back.omega_field == p.omega_field);
  CHECK(back.j_spin == p.j_spin);

  const auto d = DickeParams::from_reduced(0.8, -1.5, 64.0);
  const auto dback = dicke_params_from_json(to_json_string(d));
  CHECK(dback.omega_cavity == d.omega_cavity);
  CHECK(dback.epsilon_atom == d.epsilon_atom);
  CHECK(dback.xi() == doctest::Approx(0.8).epsilon(1e-14));
}

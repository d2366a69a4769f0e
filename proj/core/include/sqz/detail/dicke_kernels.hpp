#pragma once

// Scalar-generic core of the Dicke squeezing dynamics: the four-angle
// Bogoliubov set, the full spin/photon quadrature-parameter expressions,
// the a<->b exchange transformation, and the symplectic covariance route
// used for verification.
//
// The photon expressions are transcribed independently of the exchange
// rule on purpose: the two paths are compared to 1e-12 in the tests as a
// transcription regression.

#include <array>
#include <cmath>
#include <stdexcept>

#include "sqz/errors.hpp"

namespace sqz::detail {

template <class Real>
struct DickeAngleSet {
  Real phi1, phi2, phi_a, phi_b;
  Real omega_a_mid, omega_b_mid;  // the paper's intermediate omega_{a(b)}
  Real big_omega_a, big_omega_b;  // polariton frequencies
};

// Angles from the quadratic-Hamiltonian coefficients (all in units of g):
//   tan 2phi1  = 2 gamma / (omega - eps),  2phi1 in (0, pi)
//   tanh 2phi2 = 2 gamma cos(2phi1) / (omega + eps)
//   tanh 2phi_a = +gamma sin(2phi1) / omega_a_mid
//   tanh 2phi_b = -gamma sin(2phi1) / omega_b_mid
// The (0, pi) branch keeps sin(2phi1) > 0 and assigns cos(2phi1) the sign
// of omega - eps; it is continuous across resonance and is the branch that
// reproduces the truncated-Fock dynamics on both sides of resonance.
template <class Real>
DickeAngleSet<Real> make_angle_set(const Real& omega, const Real& eps, const Real& gamma) {
  using std::atan2;
  using std::atanh;
  using std::cos;
  using std::fabs;
  using std::sin;
  using std::sqrt;
  DickeAngleSet<Real> s{};
  const Real two_phi1 = atan2(2 * gamma, omega - eps);
  s.phi1 = two_phi1 / 2;
  const Real c1 = cos(two_phi1);
  const Real s1 = sin(two_phi1);
  const Real t2 = 2 * gamma * c1 / (omega + eps);
  if (!(fabs(t2) < 1)) throw CriticalSingularity("dicke angles: |tanh 2phi2| >= 1");
  s.phi2 = atanh(t2) / 2;
  const Real half_sum = (omega + eps) / 2;
  const Real half_diff = (omega - eps) / 2;
  const Real outer = sqrt(half_sum * half_sum - gamma * gamma * c1 * c1);
  const Real inner = sqrt(half_diff * half_diff + gamma * gamma);
  s.omega_a_mid = outer + inner;
  s.omega_b_mid = outer - inner;
  const Real coupling = gamma * s1;
  const Real ta = coupling / s.omega_a_mid;
  const Real tb = -coupling / s.omega_b_mid;
  if (!(fabs(ta) < 1) || !(fabs(tb) < 1))
    throw CriticalSingularity("dicke angles: soft mode closed, |tanh 2phi_{a,b}| >= 1");
  s.phi_a = atanh(ta) / 2;
  s.phi_b = atanh(tb) / 2;
  s.big_omega_a = sqrt(s.omega_a_mid * s.omega_a_mid - coupling * coupling);
  s.big_omega_b = sqrt(s.omega_b_mid * s.omega_b_mid - coupling * coupling);
  return s;
}

// Time-independent hyperbolic/trig combinations entering Eqs. of motion.
template <class Real>
struct DickeAngleCache {
  Real sin2p1, cos2p1;
  Real cosh2p2, sinh2p2, sinh4p2;
  Real sinh4pa, cosh4pa, sinh2pa;
  Real sinh4pb, cosh4pb, sinh2pb;
  Real sinh_apb, cosh_apb;  // sinh/cosh(phi_a + phi_b)
  Real sinh_amb, cosh_amb;  // sinh/cosh(phi_a - phi_b)
  Real omega_a, omega_b;    // polariton frequencies
};

template <class Real>
DickeAngleCache<Real> make_angle_cache(const DickeAngleSet<Real>& s) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  DickeAngleCache<Real> c{};
  c.sin2p1 = sin(2 * s.phi1);
  c.cos2p1 = cos(2 * s.phi1);
  c.cosh2p2 = cosh(2 * s.phi2);
  c.sinh2p2 = sinh(2 * s.phi2);
  c.sinh4p2 = sinh(4 * s.phi2);
  c.sinh4pa = sinh(4 * s.phi_a);
  c.cosh4pa = cosh(4 * s.phi_a);
  c.sinh2pa = sinh(2 * s.phi_a);
  c.sinh4pb = sinh(4 * s.phi_b);
  c.cosh4pb = cosh(4 * s.phi_b);
  c.sinh2pb = sinh(2 * s.phi_b);
  c.sinh_apb = sinh(s.phi_a + s.phi_b);
  c.cosh_apb = cosh(s.phi_a + s.phi_b);
  c.sinh_amb = sinh(s.phi_a - s.phi_b);
  c.cosh_amb = cosh(s.phi_a - s.phi_b);
  c.omega_a = s.big_omega_a;
  c.omega_b = s.big_omega_b;
  return c;
}

// a <-> b relabeling: phi_a <-> phi_b, Omega_a <-> Omega_b, phi1 -> -phi1,
// phi2 unchanged. Applying abc_spin to the exchanged cache yields the
// photon parameters.
template <class Real>
DickeAngleCache<Real> exchange_modes(const DickeAngleCache<Real>& c) {
  DickeAngleCache<Real> e = c;
  e.sin2p1 = -c.sin2p1;
  e.sinh4pa = c.sinh4pb;
  e.cosh4pa = c.cosh4pb;
  e.sinh2pa = c.sinh2pb;
  e.sinh4pb = c.sinh4pa;
  e.cosh4pb = c.cosh4pa;
  e.sinh2pb = c.sinh2pa;
  e.sinh_amb = -c.sinh_amb;
  e.omega_a = c.omega_b;
  e.omega_b = c.omega_a;
  return e;
}

template <class Real>
struct Quad {
  Real a, b, c;
};

// Spin quadrature parameters A_s, B_s, C_s.
template <class Real>
Quad<Real> dicke_abc_spin_kernel(const DickeAngleCache<Real>& k, const Real& t) {
  using std::cos;
  using std::sin;
  const Real sa = sin(k.omega_a * t), ca = cos(k.omega_a * t);
  const Real sb = sin(k.omega_b * t), cb = cos(k.omega_b * t);
  const Real sa2 = sa * sa, ca2 = ca * ca, sb2 = sb * sb, cb2 = cb * cb;
  const Real cos_m = cos((k.omega_a - k.omega_b) * t);
  const Real cos_p = cos((k.omega_a + k.omega_b) * t);
  const Real sin_m = sin((k.omega_a - k.omega_b) * t);
  const Real sin_p = sin((k.omega_a + k.omega_b) * t);
  const Real sin2a = sin(2 * k.omega_a * t), sin2b = sin(2 * k.omega_b * t);

  Quad<Real> q;
  q.a = -k.cosh2p2 / 2 *
            ((k.cosh2p2 - k.cos2p1) * k.sinh4pa * sa2 + (k.cosh2p2 + k.cos2p1) * k.sinh4pb * sb2) -
        k.sin2p1 * k.sinh4p2 / 4 * (ca2 + k.cosh4pa * sa2 + cb2 + k.cosh4pb * sb2) -
        (k.sinh2p2 * k.cosh_apb + k.sin2p1 * k.cosh2p2 * k.sinh_apb) * k.sinh_apb * k.sinh2p2 *
            cos_m +
        (k.sinh2p2 * k.sinh_apb + k.sin2p1 * k.cosh2p2 * k.cosh_apb) * k.cosh_apb * k.sinh2p2 *
            cos_p;

  q.b = k.cosh2p2 / 2 *
            ((1 - k.cos2p1 * k.cosh2p2) * k.sinh2pa * sin2a +
             (1 + k.cos2p1 * k.cosh2p2) * k.sinh2pb * sin2b) +
        (k.cos2p1 * k.sinh2p2 * k.cosh_amb + k.sin2p1 * k.sinh_amb) * k.sinh_apb * k.sinh2p2 *
            sin_m +
        (k.cos2p1 * k.sinh2p2 * k.sinh_amb + k.sin2p1 * k.cosh_amb) * k.cosh_apb * k.sinh2p2 *
            sin_p;

  q.c = k.cosh2p2 / 2 * (k.cosh2p2 - k.cos2p1) * (ca2 + k.cosh4pa * sa2) +
        k.cosh2p2 / 2 * (k.cosh2p2 + k.cos2p1) * (cb2 + k.cosh4pb * sb2) +
        k.sin2p1 * k.sinh4p2 / 4 * (k.sinh4pa * sa2 + k.sinh4pb * sb2) +
        (k.sinh2p2 * k.sinh_apb + k.sin2p1 * k.cosh2p2 * k.cosh_apb) * k.sinh_apb * k.sinh2p2 *
            cos_m -
        (k.sinh2p2 * k.cosh_apb + k.sin2p1 * k.cosh2p2 * k.sinh_apb) * k.cosh_apb * k.sinh2p2 *
            cos_p;
  return q;
}

// Photon quadrature parameters A_p, B_p, C_p, transcribed directly (not via
// the exchange rule).
template <class Real>
Quad<Real> dicke_abc_photon_kernel(const DickeAngleCache<Real>& k, const Real& t) {
  using std::cos;
  using std::sin;
  const Real sa = sin(k.omega_a * t), ca = cos(k.omega_a * t);
  const Real sb = sin(k.omega_b * t), cb = cos(k.omega_b * t);
  const Real sa2 = sa * sa, ca2 = ca * ca, sb2 = sb * sb, cb2 = cb * cb;
  const Real cos_m = cos((k.omega_a - k.omega_b) * t);
  const Real cos_p = cos((k.omega_a + k.omega_b) * t);
  const Real sin_m = sin((k.omega_a - k.omega_b) * t);
  const Real sin_p = sin((k.omega_a + k.omega_b) * t);
  const Real sin2a = sin(2 * k.omega_a * t), sin2b = sin(2 * k.omega_b * t);

  Quad<Real> q;
  q.a = -k.cosh2p2 / 2 *
            ((k.cosh2p2 + k.cos2p1) * k.sinh4pa * sa2 + (k.cosh2p2 - k.cos2p1) * k.sinh4pb * sb2) +
        k.sin2p1 * k.sinh4p2 / 4 * (ca2 + k.cosh4pa * sa2 + cb2 + k.cosh4pb * sb2) -
        (k.sinh2p2 * k.cosh_apb - k.sin2p1 * k.cosh2p2 * k.sinh_apb) * k.sinh_apb * k.sinh2p2 *
            cos_m +
        (k.sinh2p2 * k.sinh_apb - k.sin2p1 * k.cosh2p2 * k.cosh_apb) * k.cosh_apb * k.sinh2p2 *
            cos_p;

  q.b = k.cosh2p2 / 2 *
            ((1 + k.cos2p1 * k.cosh2p2) * k.sinh2pa * sin2a +
             (1 - k.cos2p1 * k.cosh2p2) * k.sinh2pb * sin2b) -
        (k.cos2p1 * k.sinh2p2 * k.cosh_amb + k.sin2p1 * k.sinh_amb) * k.sinh_apb * k.sinh2p2 *
            sin_m -
        (k.cos2p1 * k.sinh2p2 * k.sinh_amb + k.sin2p1 * k.cosh_amb) * k.cosh_apb * k.sinh2p2 *
            sin_p;

  q.c = k.cosh2p2 / 2 * (k.cosh2p2 + k.cos2p1) * (ca2 + k.cosh4pa * sa2) +
        k.cosh2p2 / 2 * (k.cosh2p2 - k.cos2p1) * (cb2 + k.cosh4pb * sb2) -
        k.sin2p1 * k.sinh4p2 / 4 * (k.sinh4pa * sa2 + k.sinh4pb * sb2) +
        (k.sinh2p2 * k.sinh_apb - k.sin2p1 * k.cosh2p2 * k.cosh_apb) * k.sinh_apb * k.sinh2p2 *
            cos_m -
        (k.sinh2p2 * k.cosh_apb - k.sin2p1 * k.cosh2p2 * k.sinh_apb) * k.cosh_apb * k.sinh2p2 *
            cos_p;
  return q;
}

// zeta^2 = C - sqrt(A^2 + B^2), with a tolerance band for roundoff-negative
// radicands; anything beyond -1e-9 C indicates a transcription bug upstream.
template <class Real>
Real zeta_squared(const Quad<Real>& q) {
  using std::sqrt;
  Real rad = q.c - sqrt(q.a * q.a + q.b * q.b);
  if (rad < 0) {
    if (rad >= -Real(1e-9) * q.c) return Real(0);
    throw std::logic_error("dicke zeta: radicand beyond roundoff band, formula inconsistency");
  }
  return rad;
}

// ---------------------------------------------------------------------------
// Symplectic covariance route. Quadrature order (x_a, p_a, x_b, p_b), vacuum
// covariance I/2; the evolved covariance is S sigma0 S^T with
// S = M rot(t) M^{-1}, M = M1 M2 Ma Mb the composed Bogoliubov symplectics.
// Pure-state symplecticity of S is a nontrivial check of the angle algebra.
// ---------------------------------------------------------------------------

template <class Real>
using Mat4 = std::array<std::array<Real, 4>, 4>;

template <class Real>
Mat4<Real> mat_mul(const Mat4<Real>& a, const Mat4<Real>& b) {
  Mat4<Real> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Real s = 0;
      for (int l = 0; l < 4; ++l) s += a[i][l] * b[l][j];
      r[i][j] = s;
    }
  return r;
}

template <class Real>
Mat4<Real> mat_identity() {
  Mat4<Real> r{};
  for (int i = 0; i < 4; ++i) r[i][i] = 1;
  return r;
}

// Covariance matrix of the evolved vacuum at time t.
template <class Real>
Mat4<Real> dicke_covariance_kernel(const DickeAngleSet<Real>& s, const Real& t) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::sin;
  using std::sinh;

  // beam splitter U1: a -> a cos - b sin, b -> b cos + a sin
  const Real c1 = cos(s.phi1), s1 = sin(s.phi1);
  Mat4<Real> m1{};
  m1[0][0] = c1; m1[0][2] = -s1;
  m1[1][1] = c1; m1[1][3] = -s1;
  m1[2][0] = s1; m1[2][2] = c1;
  m1[3][1] = s1; m1[3][3] = c1;

  // two-mode squeeze U2: x_a -> ch x_a - sh x_b, p_a -> ch p_a + sh p_b
  const Real ch2 = cosh(s.phi2), sh2 = sinh(s.phi2);
  Mat4<Real> m2{};
  m2[0][0] = ch2; m2[0][2] = -sh2;
  m2[1][1] = ch2; m2[1][3] = sh2;
  m2[2][0] = -sh2; m2[2][2] = ch2;
  m2[3][1] = sh2; m2[3][3] = ch2;

  // single-mode squeezes: x -> e^{-phi} x, p -> e^{+phi} p
  Mat4<Real> msq{};
  msq[0][0] = exp(-s.phi_a);
  msq[1][1] = exp(s.phi_a);
  msq[2][2] = exp(-s.phi_b);
  msq[3][3] = exp(s.phi_b);

  const Mat4<Real> m = mat_mul(mat_mul(m1, m2), msq);

  // inverses in reverse order; each factor inverts by angle negation
  Mat4<Real> m1i{};
  m1i[0][0] = c1; m1i[0][2] = s1;
  m1i[1][1] = c1; m1i[1][3] = s1;
  m1i[2][0] = -s1; m1i[2][2] = c1;
  m1i[3][1] = -s1; m1i[3][3] = c1;
  Mat4<Real> m2i{};
  m2i[0][0] = ch2; m2i[0][2] = sh2;
  m2i[1][1] = ch2; m2i[1][3] = -sh2;
  m2i[2][0] = sh2; m2i[2][2] = ch2;
  m2i[3][1] = -sh2; m2i[3][3] = ch2;
  Mat4<Real> msqi{};
  msqi[0][0] = exp(s.phi_a);
  msqi[1][1] = exp(-s.phi_a);
  msqi[2][2] = exp(s.phi_b);
  msqi[3][3] = exp(-s.phi_b);
  const Mat4<Real> minv = mat_mul(mat_mul(msqi, m2i), m1i);

  // normal-mode rotation
  const Real ca = cos(s.big_omega_a * t), sa = sin(s.big_omega_a * t);
  const Real cb = cos(s.big_omega_b * t), sb = sin(s.big_omega_b * t);
  Mat4<Real> rot{};
  rot[0][0] = ca; rot[0][1] = sa;
  rot[1][0] = -sa; rot[1][1] = ca;
  rot[2][2] = cb; rot[2][3] = sb;
  rot[3][2] = -sb; rot[3][3] = cb;

  const Mat4<Real> prop = mat_mul(mat_mul(m, rot), minv);

  // sigma = S (I/2) S^T
  Mat4<Real> sigma{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Real acc = 0;
      for (int l = 0; l < 4; ++l) acc += prop[i][l] * prop[j][l];
      sigma[i][j] = acc / 2;
    }
  return sigma;
}

// Symplectic eigenvalues of a 4x4 covariance matrix via the trace
// invariants of A = -(J sigma)^2, whose eigenvalues are {nu_a^2, nu_b^2}
// doubly degenerate. Pure two-mode Gaussian states have nu = 1/2.
template <class Real>
std::array<Real, 2> symplectic_eigenvalues(const Mat4<Real>& sigma) {
  using std::sqrt;
  Mat4<Real> j{};
  j[0][1] = 1; j[1][0] = -1;
  j[2][3] = 1; j[3][2] = -1;
  const Mat4<Real> js = mat_mul(j, sigma);
  Mat4<Real> a = mat_mul(js, js);
  for (auto& row : a)
    for (auto& v : row) v = -v;
  Real tr = 0, tr2 = 0;
  for (int i = 0; i < 4; ++i) tr += a[i][i];
  const Mat4<Real> a2 = mat_mul(a, a);
  for (int i = 0; i < 4; ++i) tr2 += a2[i][i];
  const Real s1 = tr / 2;          // nu_a^2 + nu_b^2
  const Real s2 = tr2 / 2;         // nu_a^4 + nu_b^4
  const Real p = (s1 * s1 - s2) / 2;
  const Real disc = sqrt(s1 * s1 - 4 * p);
  return {sqrt((s1 + disc) / 2), sqrt((s1 - disc) / 2)};
}

}  // namespace sqz::detail

#pragma once

// Scalar-generic evaluation of the transverse-field OAT quadrature dynamics.
// Instantiated with double on the production path and with multiprecision
// types in the verification tests.

#include <cmath>

namespace sqz::detail {

template <class Real>
struct OatQuad {
  Real a, b, c;
};

// A = -sin^2(w t) sinh(8 th), B = sin(2 w t) sinh(4 th),
// C = cos^2(w t) + sin^2(w t) cosh(8 th)
template <class Real>
OatQuad<Real> oat_abc_kernel(const Real& theta_a, const Real& omega_a, const Real& t) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  const Real s = sin(omega_a * t);
  const Real c = cos(omega_a * t);
  OatQuad<Real> q;
  q.a = -s * s * sinh(8 * theta_a);
  q.b = sin(2 * omega_a * t) * sinh(4 * theta_a);
  q.c = c * c + s * s * cosh(8 * theta_a);
  return q;
}

// Direct route: zeta = sqrt(C - sqrt(A^2 + B^2)). Loses all digits in double
// below delta ~ 1e-5; kept for the multiprecision cross-checks.
template <class Real>
Real oat_zeta_direct_kernel(const Real& theta_a, const Real& omega_a, const Real& t) {
  using std::sqrt;
  const auto q = oat_abc_kernel(theta_a, omega_a, t);
  return sqrt(q.c - sqrt(q.a * q.a + q.b * q.b));
}

// Cancellation-free route. Reduction of the A/B/C expressions with
// w = sinh(4 th) sin(w t):
//   C = 1 + 2 w^2,  A^2 + B^2 = 4 w^2 (1 + w^2)
//   => zeta = sqrt(1 + w^2) - |w| = 1 / (|w| + sqrt(1 + w^2)),
// the last form exact to roundoff for any w.
template <class Real>
Real oat_zeta_stable_kernel(const Real& theta_a, const Real& omega_a, const Real& t) {
  using std::abs;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  const Real w = abs(sinh(4 * theta_a) * sin(omega_a * t));
  return 1 / (w + sqrt(1 + w * w));
}

}  // namespace sqz::detail

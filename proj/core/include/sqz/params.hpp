#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqz {

enum class PhaseLabel { ordered, disordered, critical };

/// Phase classification relative to the critical point xi_c = 1.
/// delta = |xi - 1| is the control-parameter distance used throughout.
struct Phase {
  PhaseLabel label = PhaseLabel::critical;
  double delta = 0.0;

  bool is_ordered() const { return label == PhaseLabel::ordered; }
  bool is_disordered() const { return label == PhaseLabel::disordered; }
  bool is_critical() const { return label == PhaseLabel::critical; }
};

/// Classify by the reduced parameter. Ordered (superradiant) for xi < 1,
/// disordered (normal) for xi > 1, critical exactly at xi = 1.
/// Throws std::domain_error for negative xi.
Phase classify_phase(double xi);

/// "ordered"/"disordered"/"critical", or the cavity-QED synonyms
/// "superradiant"/"normal" when dicke_names is set.
std::string phase_name(PhaseLabel label, bool dicke_names = false);

/// Transverse-field one-axis-twisting model. Energies are expressed in
/// units of 2*kappa*J downstream; times in 1/(2*kappa*J).
struct OatParams {
  double kappa;        // twisting strength, > 0
  double omega_field;  // transverse field, >= 0
  double j_spin;       // spin quantum number, > 0, nominally large

  OatParams(double kappa_, double omega_field_, double j_spin_);

  double xi() const { return omega_field / (2.0 * kappa * j_spin); }
  double energy_unit() const { return 2.0 * kappa * j_spin; }

  /// Convenience: kappa = 1/(2 j), omega = xi, so the unit 2*kappa*J is 1.
  static OatParams from_xi(double xi, double j_spin = 1.0);
};

/// Dicke model of N two-level atoms and one cavity mode. Energies are
/// expressed in units of g downstream; times in 1/g.
struct DickeParams {
  double omega_cavity;  // cavity frequency, > 0
  double epsilon_atom;  // atomic transition frequency, > 0
  double g_coupling;    // dipole coupling, > 0
  double n_atoms;       // atom count, > 0 (J = N/2)

  DickeParams(double omega, double epsilon, double g, double n_atoms_);

  double xi() const { return epsilon_atom * omega_cavity / (g_coupling * g_coupling); }
  double delta_detune() const {
    return (epsilon_atom - omega_cavity) / (epsilon_atom + omega_cavity);
  }
  double psi() const;
  double j_spin() const { return n_atoms / 2.0; }

  /// Build from the reduced pair (xi, psi) at g = 1:
  /// omega = sqrt(xi) e^{psi/2}, epsilon = sqrt(xi) e^{-psi/2}.
  static DickeParams from_reduced(double xi, double psi, double n_atoms = 100.0);
};

/// Both Z2 branches of an order parameter.
struct SignPair {
  double plus;
  double minus;
};

/// Dicke order parameters; alpha is slaved to m (alpha = -g m / (omega sqrt(N))),
/// so alpha_plus pairs with m_plus.
struct DickeOrder {
  double m_plus, m_minus;
  double alpha_plus, alpha_minus;
};

/// +-sqrt(1 - xi^2) in units of J for xi < 1; 0 at and above the transition.
SignPair oat_order_parameter(const OatParams& p);

/// Mean-spin tilt: arccos(xi) for xi < 1, else 0. Range [0, pi/2].
double oat_rotation_angle(const OatParams& p);

DickeOrder dicke_order_parameters(const DickeParams& p);

/// psi = -2 atanh(Delta). Requires |Delta| < 1.
double delta_to_psi(double delta_detune);
/// Delta = -tanh(psi / 2).
double psi_to_delta(double psi);

/// Points (omega/g, epsilon/g) on the critical hyperbola epsilon*omega = g^2,
/// linearly spaced in omega/g over [lo, hi]. count >= 2, 0 < lo < hi.
std::vector<std::pair<double, double>> phase_boundary_samples(double lo, double hi, int count);

// JSON round-trip of parameter sets. Key names are part of the file contract:
// kappa, omega_field, j_spin, xi / omega_cavity, epsilon_atom, g_coupling,
// n_atoms, xi, delta_detune, psi.
std::string to_json_string(const OatParams& p);
std::string to_json_string(const DickeParams& p);
OatParams oat_params_from_json(std::string_view text);
DickeParams dicke_params_from_json(std::string_view text);

}  // namespace sqz

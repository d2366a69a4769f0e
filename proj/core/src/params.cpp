#include "sqz/params.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sqz {

Phase classify_phase(double xi) {
  if (xi < 0.0 || !std::isfinite(xi))
    throw std::domain_error("classify_phase: xi must be finite and >= 0");
  Phase ph;
  ph.delta = std::abs(xi - 1.0);
  if (xi < 1.0)
    ph.label = PhaseLabel::ordered;
  else if (xi > 1.0)
    ph.label = PhaseLabel::disordered;
  else
    ph.label = PhaseLabel::critical;
  return ph;
}

std::string phase_name(PhaseLabel label, bool dicke_names) {
  switch (label) {
    case PhaseLabel::ordered:
      return dicke_names ? "superradiant" : "ordered";
    case PhaseLabel::disordered:
      return dicke_names ? "normal" : "disordered";
    case PhaseLabel::critical:
      return "critical";
  }
  return "?";
}

OatParams::OatParams(double kappa_, double omega_field_, double j_spin_)
    : kappa(kappa_), omega_field(omega_field_), j_spin(j_spin_) {
  if (!(kappa > 0.0)) throw std::invalid_argument("OatParams: kappa must be > 0");
  if (!(omega_field >= 0.0)) throw std::invalid_argument("OatParams: omega_field must be >= 0");
  if (!(j_spin > 0.0)) throw std::invalid_argument("OatParams: j_spin must be > 0");
}

OatParams OatParams::from_xi(double xi, double j_spin) {
  return OatParams(1.0 / (2.0 * j_spin), xi, j_spin);
}

DickeParams::DickeParams(double omega, double epsilon, double g, double n_atoms_)
    : omega_cavity(omega), epsilon_atom(epsilon), g_coupling(g), n_atoms(n_atoms_) {
  if (!(omega_cavity > 0.0)) throw std::invalid_argument("DickeParams: omega_cavity must be > 0");
  if (!(epsilon_atom > 0.0)) throw std::invalid_argument("DickeParams: epsilon_atom must be > 0");
  if (!(g_coupling > 0.0)) throw std::invalid_argument("DickeParams: g_coupling must be > 0");
  if (!(n_atoms > 0.0)) throw std::invalid_argument("DickeParams: n_atoms must be > 0");
}

double DickeParams::psi() const {
  // equivalent to -2 atanh(Delta); log form avoids the |Delta|->1 blowup order
  return std::log(omega_cavity / epsilon_atom);
}

DickeParams DickeParams::from_reduced(double xi, double psi, double n_atoms) {
  if (!(xi > 0.0)) throw std::invalid_argument("DickeParams::from_reduced: xi must be > 0");
  const double root = std::sqrt(xi);
  return DickeParams(root * std::exp(psi / 2.0), root * std::exp(-psi / 2.0), 1.0, n_atoms);
}

SignPair oat_order_parameter(const OatParams& p) {
  const double xi = p.xi();
  if (xi >= 1.0) return {0.0, 0.0};
  const double m = std::sqrt((1.0 - xi) * (1.0 + xi));
  return {m, -m};
}

double oat_rotation_angle(const OatParams& p) {
  const double xi = p.xi();
  return xi < 1.0 ? std::acos(xi) : 0.0;
}

DickeOrder dicke_order_parameters(const DickeParams& p) {
  const double xi = p.xi();
  if (xi >= 1.0) return {0.0, 0.0, 0.0, 0.0};
  const double m = 0.5 * p.n_atoms * std::sqrt((1.0 - xi) * (1.0 + xi));
  const double alpha = -p.g_coupling * m / (p.omega_cavity * std::sqrt(p.n_atoms));
  return {m, -m, alpha, -alpha};
}

double delta_to_psi(double delta_detune) {
  if (!(std::abs(delta_detune) < 1.0))
    throw std::domain_error("delta_to_psi: |Delta| must be < 1");
  return -2.0 * std::atanh(delta_detune);
}

double psi_to_delta(double psi) { return -std::tanh(psi / 2.0); }

std::vector<std::pair<double, double>> phase_boundary_samples(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::domain_error("phase_boundary_samples: need 0 < lo < hi");
  if (count < 2) throw std::domain_error("phase_boundary_samples: count must be >= 2");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double w = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    pts.emplace_back(w, 1.0 / w);
  }
  return pts;
}

std::string to_json_string(const OatParams& p) {
  nlohmann::json j;
  j["kappa"] = p.kappa;
  j["omega_field"] = p.omega_field;
  j["j_spin"] = p.j_spin;
  j["xi"] = p.xi();
  return j.dump();
}

std::string to_json_string(const DickeParams& p) {
  nlohmann::json j;
  j["omega_cavity"] = p.omega_cavity;
  j["epsilon_atom"] = p.epsilon_atom;
  j["g_coupling"] = p.g_coupling;
  j["n_atoms"] = p.n_atoms;
  j["xi"] = p.xi();
  j["delta_detune"] = p.delta_detune();
  j["psi"] = p.psi();
  return j.dump();
}

OatParams oat_params_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  return OatParams(j.at("kappa").get<double>(), j.at("omega_field").get<double>(),
                   j.at("j_spin").get<double>());
}

DickeParams dicke_params_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  return DickeParams(j.at("omega_cavity").get<double>(), j.at("epsilon_atom").get<double>(),
                     j.at("g_coupling").get<double>(), j.at("n_atoms").get<double>());
}

}  // namespace sqz

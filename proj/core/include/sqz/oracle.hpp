#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "sqz/dicke.hpp"
#include "sqz/errors.hpp"
#include "sqz/oat.hpp"
#include "sqz/params.hpp"

namespace sqz {

/// Truncated occupation-number basis. For two modes an independent cutoff
/// per mode is allowed (n_max_b < 0 means "same as n_max"), and the basis
/// may be restricted to the even total-occupation sector, which the
/// quadratic Hamiltonians conserve and the vacuum inhabits.
struct FockBasis {
  int mode_count = 1;
  int n_max = 8;
  int n_max_b = -1;
  bool even_sector = false;

  int cutoff_a() const { return n_max; }
  int cutoff_b() const { return n_max_b < 0 ? n_max : n_max_b; }
  std::size_t dimension() const;
};

/// |J, m> basis of the collective spin.
struct SpinBasis {
  double j;
  std::size_t dimension() const { return static_cast<std::size_t>(2.0 * j) + 1; }
};

/// State vector with its basis metadata; norm stays 1 under the exact
/// eigendecomposition propagator.
struct OracleState {
  FockBasis basis;
  std::vector<std::complex<double>> amplitudes;
  double time = 0.0;

  double norm() const;
};

struct ConvergenceEntry {
  int n_max_a = 0;
  int n_max_b = 0;
  std::string observable;
  double value = 0.0;
  double delta_on_doubling = 0.0;
};

struct ConvergenceRecord {
  std::vector<ConvergenceEntry> entries;
  bool converged = false;
  std::string note;
};

std::string to_json_string(const ConvergenceRecord& rec);

struct OracleOptions {
  int start_n_max = 16;
  double tol = 1e-10;
  int max_growth_steps = 24;
  std::size_t dim_limit = 9000;  // dense eigensolver guard, sector dimension
};

struct OatOracleResult {
  std::vector<Quadratures> values;
  ConvergenceRecord record;
};

struct DickeOracleResult {
  std::vector<Quadratures> spin;
  std::vector<Quadratures> photon;
  ConvergenceRecord record;
};

/// Fixed-cutoff evolution of the vacuum under the single-mode Hamiltonian
/// c1 n + c2 (a+ a+ + a a): builds the dense matrix, diagonalises, returns
/// (A, B, C) at each time.
std::vector<Quadratures> fock_evolve_oat_at(const OatBosonCoeffs& c, std::span<const double> times,
                                            int n_max, bool even_sector = true);

/// Fixed-cutoff two-mode evolution of |0,0> under Eq.-of-motion coefficients
/// (omega, eps~, gamma); fills spin (b-mode) and photon (a-mode) quadrature
/// parameters.
void fock_evolve_dicke_at(const DickeBosonCoeffs& c, std::span<const double> times, int n_max_a,
                          int n_max_b, bool even_sector, std::vector<Quadratures>& spin,
                          std::vector<Quadratures>& photon);

/// Full state access for invariant tests (norm, parity, energy).
OracleState fock_evolve_oat_state(const OatBosonCoeffs& c, double t, int n_max,
                                  bool even_sector = false);

/// Cutoff-doubled single-mode oracle: doubles n_max until every observable
/// moves by less than tol across the grid. Throws ConvergenceFailure with
/// the record when the budget runs out.
OatOracleResult fock_evolve_oat(const OatBosonCoeffs& c, std::span<const double> times,
                                const OracleOptions& opts = {});

/// Adaptive two-mode oracle. Cutoffs grow geometrically per mode, guided by
/// the occupation mass at each mode's boundary levels; stops when the
/// projected truncation error (successive change times contraction ratio)
/// falls below tol. The record keeps one entry per observable per step.
DickeOracleResult fock_evolve_dicke(const DickeBosonCoeffs& c, std::span<const double> times,
                                    const OracleOptions& opts = {});

/// Exact finite-J evolution of the full spin Hamiltonian -kappa Sx^2 + Omega Sz
/// with the Kitagawa-Ueda minimised transverse uncertainty, normalised by
/// sqrt(J/2). Times are in 1/(2 kappa J_finite); the initial state is the
/// mean-field coherent state (+ branch of the order parameter).
std::vector<double> spin_ed_oat(const OatParams& p, double j_finite, const Phase& phase,
                                std::span<const double> times);

/// Generic cutoff-doubling driver: eval(n_max) returns one value per named
/// observable; doubles until the largest change is below tol.
struct DoublingResult {
  std::vector<double> values;
  ConvergenceRecord record;
};

template <class Evaluator>
DoublingResult convergence_doubling(Evaluator&& eval, int start_n_max, double tol,
                                    int max_doublings,
                                    const std::vector<std::string>& names = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("convergence_doubling: tol must be > 0");
  if (start_n_max < 1) throw std::invalid_argument("convergence_doubling: start_n_max must be >= 1");
  DoublingResult out;
  std::vector<double> prev = eval(start_n_max);
  int n = start_n_max;
  for (int step = 0; step < max_doublings; ++step) {
    n *= 2;
    std::vector<double> cur = eval(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const double change = std::abs(cur[i] - prev[i]);
      worst = std::max(worst, change);
      ConvergenceEntry e;
      e.n_max_a = n;
      e.observable = i < names.size() ? names[i] : "obs" + std::to_string(i);
      e.value = cur[i];
      e.delta_on_doubling = change;
      out.record.entries.push_back(std::move(e));
    }
    if (worst < tol) {
      out.record.converged = true;
      out.values = std::move(cur);
      return out;
    }
    prev = std::move(cur);
  }
  out.record.note = "doubling budget exhausted";
  throw ConvergenceFailure("convergence_doubling: " + to_json_string(out.record));
}

}  // namespace sqz

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqz/dicke.hpp"
#include "sqz/fit.hpp"
#include "sqz/oat.hpp"
#include "sqz/oracle.hpp"
#include "sqz/params.hpp"

namespace sqz {

enum class ModelKind { oat, dicke };

/// Time-grid request: t_max in model time units (0 = choose automatically:
/// 2.25 periods for OAT, one beat window for Dicke), with at least
/// points_per_period samples per squeezing period (2 pi / Omega_b for Dicke).
struct TimeGridSpec {
  double t_max = 0.0;
  int points_per_period = 2000;
};

/// Log-spaced delta range, used when the explicit list is empty.
struct DeltaRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

struct RunConfig {
  ModelKind model = ModelKind::oat;
  PhaseLabel side = PhaseLabel::ordered;
  std::vector<double> deltas;
  DeltaRange delta_range;
  double psi = 0.0;  // Dicke detuning measure
  TimeGridSpec grid;
  std::string out_dir = ".";
  std::string prefix;
  OracleOptions oracle;
  double oracle_compare_tol = 0.0;  // 0 = model default (1e-10 OAT, 1e-8 Dicke)
  std::vector<double> ed_spins;     // finite-J list for the spin-ED study
  int parallelism = 0;              // 0 = SQZ_PARALLELISM env or hardware
  QuadMode observable = QuadMode::spin;
  double j_spin = 1.0;
  double n_atoms = 100.0;
};

/// Resolve the delta list (explicit values win over the log range).
/// Throws std::invalid_argument when empty or non-positive.
std::vector<double> config_deltas(const RunConfig& cfg);

int effective_parallelism(const RunConfig& cfg);

/// Deterministic parallel index map: body(i) runs exactly once per index;
/// callers write into preallocated slots, so the output is independent of
/// the worker count.
void parallel_for(std::size_t count, int width, const std::function<void(std::size_t)>& body);

/// JSON round-trip for configs (used by the --config file and the metadata
/// sidecars; keys mirror the field names).
std::string to_json_string(const RunConfig& cfg);
RunConfig run_config_from_json(std::string_view text);

struct RunOutputs {
  std::vector<std::string> files;
};

/// One CSV per delta (t, A, B, C, zeta, phi_min for OAT; t, zeta_s, zeta_p,
/// phi_min_s, phi_min_p for Dicke) plus one metadata sidecar.
RunOutputs run_timeseries(const RunConfig& cfg);

/// Sweep table sorted by delta: xi, delta, period_T, zeta_min (psi column
/// added for Dicke). Rows are computed in parallel; bytes are invariant
/// under the parallelism width.
RunOutputs run_sweep(const RunConfig& cfg);

struct FitReport {
  std::string text;
  std::string json;
};

/// Fit the named observable column of sweep CSVs. powerlaw fits
/// log(value) vs log(delta); affine_square fits value^2 vs delta.
FitReport run_fit(const std::vector<std::string>& csv_paths, FitModel model,
                  const std::string& observable);

struct OracleReport {
  std::string text;
  std::string json;
  bool pass = false;
};

/// Closed forms vs truncated-Fock evolution at the config's parameter
/// points; optionally the finite-J ED convergence study (ed_spins).
OracleReport run_oracle(const RunConfig& cfg);

/// Critical hyperbola samples plus labelled region sample points.
RunOutputs run_phase_diagram(const RunConfig& cfg, double lo, double hi, int count);

}  // namespace sqz

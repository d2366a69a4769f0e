// sqz: parameter sweeps, time series, oracle comparisons and critical-law
// fits for squeezing dynamics near the OAT and Dicke quantum phase
// transitions. Emits plot-ready CSV plus JSON metadata.
//
// Exit codes: 0 success, 1 computational error (critical singularity,
// oracle non-convergence), 2 usage or schema error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sqz/errors.hpp"
#include "sqz/params.hpp"
#include "sqz/sweep.hpp"

namespace {

struct CliState {
  sqz::RunConfig cfg;
  std::string config_path;
  std::string model = "oat";
  std::string side;
  std::string observable;
  std::vector<double> deltas;
  std::vector<double> range;  // lo hi count
  double psi = 0.0;
  bool have_psi = false;
  double delta_detune = 0.0;
  bool have_detune = false;
};

void add_common(CLI::App* cmd, CliState& st) {
  cmd->add_option("--config", st.config_path, "JSON config file (flags override it)");
  cmd->add_option("--model", st.model, "Model: oat | dicke")->check(CLI::IsMember({"oat", "dicke"}));
  cmd->add_option("--side", st.side,
                  "Phase side: ordered|superradiant or disordered|normal");
  cmd->add_option("--delta", st.deltas, "Explicit |xi - 1| values");
  cmd->add_option("--delta-range", st.range,
                  "Log-spaced deltas: LO HI COUNT")->expected(3);
  cmd->add_option("--psi", st.psi, "Dicke detuning measure psi");
  cmd->add_option("--detuning", st.delta_detune,
                  "Dicke relative detuning Delta in (-1, 1); converted to psi");
  cmd->add_option("--out-dir", st.cfg.out_dir, "Output directory");
  cmd->add_option("--prefix", st.cfg.prefix, "Output file prefix");
  cmd->add_option("--parallelism", st.cfg.parallelism,
                  "Worker count (0: SQZ_PARALLELISM env or hardware)");
  cmd->add_option("--t-max", st.cfg.grid.t_max, "Trace length in model time units (0 = auto)");
  cmd->add_option("--points-per-period", st.cfg.grid.points_per_period,
                  "Grid density per squeezing period");
  cmd->add_option("--n-atoms", st.cfg.n_atoms, "Dicke atom count (bookkeeping only)");
  cmd->add_option("--observable", st.observable, "Dicke sweep observable: spin | photon")
      ->check(CLI::IsMember({"spin", "photon"}));
  cmd->add_option("--oracle-start", st.cfg.oracle.start_n_max, "Oracle starting cutoff");
  cmd->add_option("--oracle-tol", st.cfg.oracle.tol, "Oracle convergence tolerance");
  cmd->add_option("--oracle-compare-tol", st.cfg.oracle_compare_tol,
                  "PASS threshold for closed-form vs oracle deviation (0 = model default)");
  cmd->add_option("--ed-spins", st.cfg.ed_spins, "Finite-J list for the spin-ED study");
}

sqz::RunConfig resolve(const CLI::App* cmd, CliState& st) {
  sqz::RunConfig cfg;
  if (!st.config_path.empty()) {
    std::ifstream in(st.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + st.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = sqz::run_config_from_json(ss.str());
  }
  auto given = [&](const std::string& flag) { return cmd->count(flag) > 0; };
  if (given("--model")) cfg.model = st.model == "dicke" ? sqz::ModelKind::dicke : sqz::ModelKind::oat;
  if (given("--side")) {
    if (st.side == "ordered" || st.side == "superradiant")
      cfg.side = sqz::PhaseLabel::ordered;
    else if (st.side == "disordered" || st.side == "normal")
      cfg.side = sqz::PhaseLabel::disordered;
    else
      throw CLI::ValidationError("--side", "unknown side '" + st.side + "'");
  }
  if (given("--delta")) cfg.deltas = st.deltas;
  if (given("--delta-range"))
    cfg.delta_range = {st.range[0], st.range[1], static_cast<int>(st.range[2])};
  if (given("--psi")) cfg.psi = st.psi;
  if (given("--detuning")) cfg.psi = sqz::delta_to_psi(st.delta_detune);
  if (given("--out-dir")) cfg.out_dir = st.cfg.out_dir;
  if (given("--prefix")) cfg.prefix = st.cfg.prefix;
  if (given("--parallelism")) cfg.parallelism = st.cfg.parallelism;
  if (given("--t-max")) cfg.grid.t_max = st.cfg.grid.t_max;
  if (given("--points-per-period")) cfg.grid.points_per_period = st.cfg.grid.points_per_period;
  if (given("--n-atoms")) cfg.n_atoms = st.cfg.n_atoms;
  if (given("--observable"))
    cfg.observable = st.observable == "photon" ? sqz::QuadMode::photon : sqz::QuadMode::spin;
  if (given("--oracle-start")) cfg.oracle.start_n_max = st.cfg.oracle.start_n_max;
  if (given("--oracle-tol")) cfg.oracle.tol = st.cfg.oracle.tol;
  if (given("--oracle-compare-tol")) cfg.oracle_compare_tol = st.cfg.oracle_compare_tol;
  if (given("--ed-spins")) cfg.ed_spins = st.cfg.ed_spins;
  return cfg;
}

void report_files(const sqz::RunOutputs& out) {
  for (const auto& f : out.files) std::cout << f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squeezing dynamics near quantum critical points"};
  app.require_subcommand(1);

  CliState st_ts, st_sw, st_or, st_pd;
  auto* ts = app.add_subcommand("timeseries", "Emit zeta(t) traces, one CSV per delta");
  add_common(ts, st_ts);
  auto* sw = app.add_subcommand("sweep", "Emit period/zeta_min vs delta tables");
  add_common(sw, st_sw);
  auto* orc = app.add_subcommand("oracle", "Compare closed forms against truncated-Fock evolution");
  add_common(orc, st_or);

  auto* fit = app.add_subcommand("fit", "Fit critical laws to sweep CSVs");
  std::vector<std::string> fit_inputs;
  std::string fit_model = "powerlaw", fit_observable = "zeta_min", fit_json_out;
  fit->add_option("input", fit_inputs, "Sweep CSV files")->required();
  fit->add_option("--fit-model", fit_model, "powerlaw | affine_square")
      ->check(CLI::IsMember({"powerlaw", "affine_square"}));
  fit->add_option("--observable", fit_observable, "Column to fit (period_T or zeta_min)");
  fit->add_option("--json-out", fit_json_out, "Write the JSON report here");

  auto* pd = app.add_subcommand("phase-diagram", "Emit the Dicke critical hyperbola");
  add_common(pd, st_pd);
  std::vector<double> pd_range{0.1, 4.0};
  int pd_count = 200;
  pd->add_option("--range", pd_range, "omega/g range: LO HI")->expected(2);
  pd->add_option("--count", pd_count, "Boundary sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (ts->parsed()) {
      report_files(sqz::run_timeseries(resolve(ts, st_ts)));
    } else if (sw->parsed()) {
      report_files(sqz::run_sweep(resolve(sw, st_sw)));
    } else if (orc->parsed()) {
      const auto rep = sqz::run_oracle(resolve(orc, st_or));
      std::cout << rep.text;
      std::cout << rep.json << '\n';
      if (!rep.pass) return 1;
    } else if (fit->parsed()) {
      const auto model =
          fit_model == "powerlaw" ? sqz::FitModel::powerlaw : sqz::FitModel::affine_square;
      const auto rep = sqz::run_fit(fit_inputs, model, fit_observable);
      std::cout << rep.text;
      if (!fit_json_out.empty()) {
        std::ofstream out(fit_json_out);
        out << rep.json << '\n';
      } else {
        std::cout << rep.json << '\n';
      }
    } else if (pd->parsed()) {
      report_files(sqz::run_phase_diagram(resolve(pd, st_pd), pd_range[0], pd_range[1], pd_count));
    }
  } catch (const sqz::CriticalSingularity& e) {
    std::cerr << "error (critical singularity): " << e.what() << '\n';
    return 1;
  } catch (const sqz::ConvergenceFailure& e) {
    std::cerr << "error (convergence): " << e.what() << '\n';
    return 1;
  } catch (const sqz::SchemaError& e) {
    std::cerr << "error (schema, column '" << e.column() << "'): " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (usage): " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error (domain): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "sqz/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "sqz/errors.hpp"
#include "sqz/table.hpp"

namespace sqz {

namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kOatTimeUnit = "1/(2kJ)";
constexpr const char* kDickeTimeUnit = "1/g";

double side_xi(PhaseLabel side, double delta) {
  if (side == PhaseLabel::ordered) {
    if (!(delta < 1.0)) throw std::invalid_argument("ordered side needs delta < 1");
    return 1.0 - delta;
  }
  return 1.0 + delta;
}

std::string model_name(ModelKind m) { return m == ModelKind::oat ? "oat" : "dicke"; }

std::string side_name(const RunConfig& cfg) {
  return phase_name(cfg.side, cfg.model == ModelKind::dicke);
}

fs::path out_path(const RunConfig& cfg, const std::string& file) {
  fs::create_directories(cfg.out_dir);
  return fs::path(cfg.out_dir) / (cfg.prefix + file);
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
  return buf;
}

void write_sidecar(const RunConfig& cfg, const std::string& command,
                   const std::vector<std::string>& files, RunOutputs& out) {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = nlohmann::json::parse(to_json_string(cfg));
  j["code_version"] = kVersion;
  j["timestamp"] = iso_timestamp();
  j["files"] = files;
  const auto path = out_path(cfg, command + "_metadata.json");
  std::ofstream f(path);
  f << j.dump(2) << '\n';
  out.files.push_back(path.string());
}

std::vector<double> uniform_grid(double t_max, std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i)
    ts[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
  return ts;
}

// OAT grid: points_per_period per T over [0, t_max]
std::vector<double> oat_grid(const OatParams& p, const Phase& phase, const TimeGridSpec& spec) {
  const double period = oat_squeezing_period(p, phase);
  const double t_max = spec.t_max > 0.0 ? spec.t_max : 2.25 * period;
  const auto n = static_cast<std::size_t>(
      std::ceil(t_max / period * spec.points_per_period)) + 1;
  return uniform_grid(t_max, std::max<std::size_t>(n, 3));
}

// Dicke grid: points_per_period per slow period 2 pi / Omega_b, and at least
// six samples per fast ripple pi / Omega_a so plateau minima are resolved
std::vector<double> dicke_grid(const DickeParams& p, const Phase& phase,
                               const TimeGridSpec& spec) {
  const auto bog = dicke_bogoliubov(dicke_boson_coefficients(p, phase));
  const double slow = 2.0 * std::numbers::pi / bog.omega_b;
  const double ripple = std::numbers::pi / bog.omega_a;
  const double t_max = spec.t_max > 0.0 ? spec.t_max : dicke_beat_window(p, phase);
  const auto by_period = static_cast<std::size_t>(
      std::ceil(t_max / slow * spec.points_per_period));
  const auto by_ripple = static_cast<std::size_t>(std::ceil(t_max / ripple * 6.0));
  return uniform_grid(t_max, std::max({by_period, by_ripple, std::size_t{2}}) + 1);
}

nlohmann::json fit_to_json(const ScalingFit& f, const std::string& observable) {
  nlohmann::json j;
  j["model"] = f.model == FitModel::powerlaw ? "powerlaw" : "affine_square";
  j["observable"] = observable;
  if (f.model == FitModel::powerlaw) {
    j["exponent"] = f.exponent;
    j["amplitude"] = f.amplitude;
  } else {
    j["u"] = f.u;
    j["v"] = f.v;
    j["u_clamped"] = f.u_clamped;
  }
  j["residual_norm"] = f.residual_norm;
  j["r_squared"] = f.r_squared;
  j["window"] = {{"lo", f.window_lo}, {"hi", f.window_hi}};
  j["side"] = phase_name(f.side);
  j["span_warning"] = f.span_warning;
  return j;
}

}  // namespace

std::vector<double> config_deltas(const RunConfig& cfg) {
  std::vector<double> ds = cfg.deltas;
  if (ds.empty() && cfg.delta_range.count > 0) {
    const auto& r = cfg.delta_range;
    if (!(r.lo > 0.0) || !(r.hi > r.lo))
      throw std::invalid_argument("delta range needs 0 < lo < hi");
    if (r.count < 2) throw std::invalid_argument("delta range needs count >= 2");
    const double llo = std::log(r.lo), lhi = std::log(r.hi);
    for (int i = 0; i < r.count; ++i)
      ds.push_back(std::exp(llo + (lhi - llo) * static_cast<double>(i) / (r.count - 1)));
  }
  if (ds.empty()) throw std::invalid_argument("no delta values requested");
  for (const double d : ds) {
    if (!(d > 0.0)) {
      if (d == 0.0)
        throw CriticalSingularity("delta = 0 requested; dynamics is singular at the critical point");
      throw std::invalid_argument("delta values must be > 0");
    }
  }
  return ds;
}

int effective_parallelism(const RunConfig& cfg) {
  if (cfg.parallelism > 0) return cfg.parallelism;
  if (const char* env = std::getenv("SQZ_PARALLELISM")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int width, const std::function<void(std::size_t)>& body) {
  if (width <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = static_cast<int>(std::min<std::size_t>(count, width));
  pool.reserve(n_threads);
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string to_json_string(const RunConfig& cfg) {
  nlohmann::json j;
  j["model"] = model_name(cfg.model);
  j["side"] = phase_name(cfg.side);
  j["deltas"] = cfg.deltas;
  j["delta_range"] = {{"lo", cfg.delta_range.lo},
                      {"hi", cfg.delta_range.hi},
                      {"count", cfg.delta_range.count}};
  j["psi"] = cfg.psi;
  j["grid"] = {{"t_max", cfg.grid.t_max}, {"points_per_period", cfg.grid.points_per_period}};
  j["out_dir"] = cfg.out_dir;
  j["prefix"] = cfg.prefix;
  j["oracle"] = {{"start_n_max", cfg.oracle.start_n_max},
                 {"tol", cfg.oracle.tol},
                 {"max_growth_steps", cfg.oracle.max_growth_steps},
                 {"dim_limit", cfg.oracle.dim_limit}};
  j["oracle_compare_tol"] = cfg.oracle_compare_tol;
  j["ed_spins"] = cfg.ed_spins;
  j["parallelism"] = cfg.parallelism;
  j["observable"] = cfg.observable == QuadMode::spin ? "spin" : "photon";
  j["j_spin"] = cfg.j_spin;
  j["n_atoms"] = cfg.n_atoms;
  return j.dump();
}

RunConfig run_config_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  RunConfig cfg;
  if (j.contains("model")) {
    const auto m = j["model"].get<std::string>();
    if (m == "oat")
      cfg.model = ModelKind::oat;
    else if (m == "dicke")
      cfg.model = ModelKind::dicke;
    else
      throw std::invalid_argument("config: unknown model '" + m + "'");
  }
  if (j.contains("side")) {
    const auto s = j["side"].get<std::string>();
    if (s == "ordered" || s == "superradiant")
      cfg.side = PhaseLabel::ordered;
    else if (s == "disordered" || s == "normal")
      cfg.side = PhaseLabel::disordered;
    else
      throw std::invalid_argument("config: unknown side '" + s + "'");
  }
  if (j.contains("deltas")) cfg.deltas = j["deltas"].get<std::vector<double>>();
  if (j.contains("delta_range")) {
    cfg.delta_range.lo = j["delta_range"].value("lo", 0.0);
    cfg.delta_range.hi = j["delta_range"].value("hi", 0.0);
    cfg.delta_range.count = j["delta_range"].value("count", 0);
  }
  cfg.psi = j.value("psi", 0.0);
  if (j.contains("grid")) {
    cfg.grid.t_max = j["grid"].value("t_max", 0.0);
    cfg.grid.points_per_period = j["grid"].value("points_per_period", 2000);
  }
  cfg.out_dir = j.value("out_dir", std::string("."));
  cfg.prefix = j.value("prefix", std::string());
  if (j.contains("oracle")) {
    cfg.oracle.start_n_max = j["oracle"].value("start_n_max", 16);
    cfg.oracle.tol = j["oracle"].value("tol", 1e-10);
    cfg.oracle.max_growth_steps = j["oracle"].value("max_growth_steps", 24);
    cfg.oracle.dim_limit = j["oracle"].value("dim_limit", std::size_t{9000});
  }
  cfg.oracle_compare_tol = j.value("oracle_compare_tol", 0.0);
  if (j.contains("ed_spins")) cfg.ed_spins = j["ed_spins"].get<std::vector<double>>();
  cfg.parallelism = j.value("parallelism", 0);
  if (j.contains("observable")) {
    const auto o = j["observable"].get<std::string>();
    if (o == "spin")
      cfg.observable = QuadMode::spin;
    else if (o == "photon")
      cfg.observable = QuadMode::photon;
    else
      throw std::invalid_argument("config: unknown observable '" + o + "'");
  }
  cfg.j_spin = j.value("j_spin", 1.0);
  cfg.n_atoms = j.value("n_atoms", 100.0);
  return cfg;
}

RunOutputs run_timeseries(const RunConfig& cfg) {
  const auto deltas = config_deltas(cfg);
  if (cfg.grid.points_per_period < 100)
    throw std::invalid_argument("timeseries: points_per_period must be >= 100");
  RunOutputs out;
  for (const double d : deltas) {
    const double xi = side_xi(cfg.side, d);
    const std::string file = "timeseries_" + model_name(cfg.model) + "_" + side_name(cfg) + "_d" +
                             ResultTable::format(d) + ".csv";
    const auto path = out_path(cfg, file);
    if (cfg.model == ModelKind::oat) {
      const auto p = OatParams::from_xi(xi, cfg.j_spin);
      const auto phase = classify_phase(xi);
      const auto grid = oat_grid(p, phase, cfg.grid);
      const auto tr = oat_timeseries(p, phase, grid);
      ResultTable tbl({{"t", kOatTimeUnit}, {"A", "-"}, {"B", "-"}, {"C", "-"},
                       {"zeta", "-"}, {"phi_min", "rad"}});
      for (std::size_t i = 0; i < tr.times.size(); ++i)
        tbl.add_row({ResultTable::format(tr.times[i]), ResultTable::format(tr.a_vals[i]),
                     ResultTable::format(tr.b_vals[i]), ResultTable::format(tr.c_vals[i]),
                     ResultTable::format(tr.zeta[i]), ResultTable::format(tr.phi_min[i])});
      tbl.write_csv(path.string());
    } else {
      const auto p = DickeParams::from_reduced(xi, cfg.psi, cfg.n_atoms);
      const auto phase = classify_phase(xi);
      const auto grid = dicke_grid(p, phase, cfg.grid);
      const auto tr = dicke_timeseries(p, phase, grid);
      ResultTable tbl({{"t", kDickeTimeUnit}, {"zeta_s", "-"}, {"zeta_p", "-"},
                       {"phi_min_s", "rad"}, {"phi_min_p", "rad"}});
      for (std::size_t i = 0; i < tr.times.size(); ++i)
        tbl.add_row({ResultTable::format(tr.times[i]), ResultTable::format(tr.spin.zeta[i]),
                     ResultTable::format(tr.photon.zeta[i]),
                     ResultTable::format(tr.spin.phi_min[i]),
                     ResultTable::format(tr.photon.phi_min[i])});
      tbl.write_csv(path.string());
    }
    out.files.push_back(path.string());
  }
  write_sidecar(cfg, "timeseries", out.files, out);
  return out;
}

RunOutputs run_sweep(const RunConfig& cfg) {
  auto deltas = config_deltas(cfg);
  std::sort(deltas.begin(), deltas.end());
  struct Row {
    double xi, delta, period, zeta_min;
  };
  std::vector<Row> rows(deltas.size());
  const int width = effective_parallelism(cfg);
  parallel_for(deltas.size(), width, [&](std::size_t i) {
    const double d = deltas[i];
    const double xi = side_xi(cfg.side, d);
    const auto phase = classify_phase(xi);
    Row r{};
    r.xi = xi;
    r.delta = d;
    if (cfg.model == ModelKind::oat) {
      const auto p = OatParams::from_xi(xi, cfg.j_spin);
      const double period = oat_squeezing_period(p, phase);
      r.period = period;
      r.zeta_min = oat_zeta(p, phase, period / 2.0).zeta;
    } else {
      const auto p = DickeParams::from_reduced(xi, cfg.psi, cfg.n_atoms);
      const auto bog = dicke_bogoliubov(dicke_boson_coefficients(p, phase));
      r.period = std::numbers::pi / bog.omega_b;
      const auto grid = dicke_grid(p, phase, cfg.grid);
      const auto tr = dicke_timeseries(p, phase, grid);
      const auto& blk = cfg.observable == QuadMode::spin ? tr.spin : tr.photon;
      r.zeta_min = extract_zeta_min(tr.times, blk.zeta).value;
    }
    rows[i] = r;
  });

  const bool dicke = cfg.model == ModelKind::dicke;
  std::vector<Column> cols{{"xi", "-"}, {"delta", "-"}};
  if (dicke) cols.push_back({"psi", "-"});
  cols.push_back({"period_T", dicke ? kDickeTimeUnit : kOatTimeUnit});
  cols.push_back({"zeta_min", "-"});
  ResultTable tbl(cols);
  for (const auto& r : rows) {
    std::vector<std::string> cells{ResultTable::format(r.xi), ResultTable::format(r.delta)};
    if (dicke) cells.push_back(ResultTable::format(cfg.psi));
    cells.push_back(ResultTable::format(r.period));
    cells.push_back(ResultTable::format(r.zeta_min));
    tbl.add_row(std::move(cells));
  }
  const auto path = out_path(cfg, "sweep_" + model_name(cfg.model) + "_" + side_name(cfg) + ".csv");
  tbl.write_csv(path.string());
  RunOutputs out;
  out.files.push_back(path.string());
  write_sidecar(cfg, "sweep", out.files, out);
  return out;
}

FitReport run_fit(const std::vector<std::string>& csv_paths, FitModel model,
                  const std::string& observable) {
  if (csv_paths.empty()) throw std::invalid_argument("run_fit: no input files");
  nlohmann::json jfits = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& path : csv_paths) {
    const auto csv = read_csv(path);
    const auto deltas = numeric_column(csv, "delta");
    const auto xis = numeric_column(csv, "xi");
    const auto values = numeric_column(csv, observable);
    std::vector<SweepRecord> recs(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      recs[i].xi = xis[i];
      recs[i].delta = deltas[i];
      recs[i].observable = observable;
      recs[i].value = values[i];
      recs[i].side = xis[i] < 1.0 ? PhaseLabel::ordered : PhaseLabel::disordered;
    }
    const ScalingFit fit =
        model == FitModel::powerlaw ? fit_powerlaw(recs) : fit_affine_square(recs);
    auto j = fit_to_json(fit, observable);
    j["input"] = path;
    jfits.push_back(j);
    text << path << ": " << observable;
    if (model == FitModel::powerlaw)
      text << " ~ delta^" << fit.exponent << "  (amplitude " << fit.amplitude << ")";
    else
      text << "^2 = " << fit.u << " + " << fit.v << " * delta";
    text << "  [R^2 " << fit.r_squared << ", rms resid " << fit.residual_norm << ", window "
         << fit.window_lo << ".." << fit.window_hi << "]";
    if (fit.span_warning) text << "  WARNING: window spans < 2 decades";
    text << '\n';
  }
  FitReport rep;
  rep.text = text.str();
  rep.json = jfits.dump(2);
  return rep;
}

OracleReport run_oracle(const RunConfig& cfg) {
  const auto deltas = config_deltas(cfg);
  const double tol = cfg.oracle_compare_tol > 0.0
                         ? cfg.oracle_compare_tol
                         : (cfg.model == ModelKind::oat ? 1e-10 : 1e-8);
  nlohmann::json jout;
  jout["tolerance"] = tol;
  auto& points = jout["points"] = nlohmann::json::array();
  std::ostringstream text;
  bool all_pass = true;

  for (const double d : deltas) {
    const double xi = side_xi(cfg.side, d);
    const auto phase = classify_phase(xi);
    nlohmann::json jp;
    jp["xi"] = xi;
    jp["delta"] = d;
    double worst = 0.0;
    if (cfg.model == ModelKind::oat) {
      const auto p = OatParams::from_xi(xi, cfg.j_spin);
      const auto coeffs = oat_boson_coefficients(p, phase);
      const double period = oat_squeezing_period(p, phase);
      const auto times = uniform_grid(period, 33);
      const auto oracle = fock_evolve_oat(coeffs, times, cfg.oracle);
      for (std::size_t i = 0; i < times.size(); ++i) {
        const auto closed = oat_abc(p, phase, times[i]);
        worst = std::max({worst, std::abs(closed.a - oracle.values[i].a),
                          std::abs(closed.b - oracle.values[i].b),
                          std::abs(closed.c - oracle.values[i].c)});
      }
      jp["convergence"] = nlohmann::json::parse(to_json_string(oracle.record));
    } else {
      const auto p = DickeParams::from_reduced(xi, cfg.psi, cfg.n_atoms);
      jp["psi"] = cfg.psi;
      const auto coeffs = dicke_boson_coefficients(p, phase);
      const double window = dicke_beat_window(p, phase);
      const auto times = uniform_grid(window, 25);
      const auto oracle = fock_evolve_dicke(coeffs, times, cfg.oracle);
      for (std::size_t i = 0; i < times.size(); ++i) {
        const auto cs = dicke_abc_spin(p, phase, times[i]);
        const auto cp = dicke_abc_photon(p, phase, times[i]);
        worst = std::max({worst, std::abs(cs.a - oracle.spin[i].a),
                          std::abs(cs.b - oracle.spin[i].b), std::abs(cs.c - oracle.spin[i].c),
                          std::abs(cp.a - oracle.photon[i].a),
                          std::abs(cp.b - oracle.photon[i].b),
                          std::abs(cp.c - oracle.photon[i].c)});
      }
      jp["convergence"] = nlohmann::json::parse(to_json_string(oracle.record));
    }
    const bool pass = worst < tol;
    all_pass = all_pass && pass;
    jp["max_abs_deviation"] = worst;
    jp["pass"] = pass;
    points.push_back(jp);
    text << model_name(cfg.model) << " xi=" << xi << (cfg.model == ModelKind::dicke
                                                          ? " psi=" + std::to_string(cfg.psi)
                                                          : std::string())
         << ": max|closed - oracle| = " << worst << "  " << (pass ? "PASS" : "FAIL") << '\n';
  }

  if (!cfg.ed_spins.empty()) {
    if (cfg.model != ModelKind::oat)
      throw std::invalid_argument("run_oracle: the spin-ED study applies to the oat model");
    const double d = deltas.front();
    const double xi = side_xi(cfg.side, d);
    const auto phase = classify_phase(xi);
    const auto p = OatParams::from_xi(xi, cfg.j_spin);
    const double t_probe = oat_squeezing_period(p, phase) / 4.0;
    const double analytic = oat_zeta(p, phase, t_probe).zeta;
    auto& jed = jout["spin_ed"] = nlohmann::json::array();
    double prev_dev = -1.0;
    bool monotone = true;
    text << "spin-ED at xi=" << xi << ", t=T/4 (analytic zeta " << analytic << "):\n";
    for (const double jf : cfg.ed_spins) {
      const double t_arr[1] = {t_probe};
      const double z = spin_ed_oat(p, jf, phase, t_arr)[0];
      const double dev = std::abs(z - analytic);
      if (prev_dev >= 0.0 && dev >= prev_dev) monotone = false;
      jed.push_back({{"j", jf}, {"zeta", z}, {"abs_dev", dev}});
      text << "  J=" << jf << ": zeta=" << z << " |dev|=" << dev << '\n';
      prev_dev = dev;
    }
    jout["spin_ed_monotone"] = monotone;
    all_pass = all_pass && monotone;
    text << "  monotone convergence: " << (monotone ? "PASS" : "FAIL") << '\n';
  }

  OracleReport rep;
  rep.pass = all_pass;
  rep.text = text.str();
  jout["pass"] = all_pass;
  rep.json = jout.dump(2);
  return rep;
}

RunOutputs run_phase_diagram(const RunConfig& cfg, double lo, double hi, int count) {
  const auto boundary = phase_boundary_samples(lo, hi, count);
  ResultTable tbl({{"omega_over_g", "-"}, {"epsilon_over_g", "-"}, {"xi", "-"}, {"region", "-"}});
  for (const auto& [w, e] : boundary)
    tbl.add_row({ResultTable::format(w), ResultTable::format(e), ResultTable::format(w * e),
                 "critical"});
  // labelled sample points on a coarse grid of the same range
  const int label_n = 8;
  for (int i = 0; i < label_n; ++i)
    for (int k = 0; k < label_n; ++k) {
      const double w = lo + (hi - lo) * (i + 0.5) / label_n;
      const double e = lo + (hi - lo) * (k + 0.5) / label_n;
      const double xi = w * e;
      if (xi == 1.0) continue;
      tbl.add_row({ResultTable::format(w), ResultTable::format(e), ResultTable::format(xi),
                   xi < 1.0 ? "superradiant" : "normal"});
    }
  const auto path = out_path(cfg, "phase_diagram.csv");
  tbl.write_csv(path.string());
  RunOutputs out;
  out.files.push_back(path.string());
  write_sidecar(cfg, "phase_diagram", out.files, out);
  return out;
}

}  // namespace sqz

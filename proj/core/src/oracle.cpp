#include "sqz/oracle.hpp"

#include <lapacke.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sqz {

namespace {

// Dense real-symmetric eigendecomposition, column-major in place.
// Returns eigenvalues ascending; a is replaced by the eigenvectors.
void symmetric_eigen(std::vector<double>& a, std::vector<double>& w, int n) {
  w.resize(static_cast<std::size_t>(n));
  const int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("symmetric_eigen: dsyevd failed, info=" + std::to_string(info));
}

using Cplx = std::complex<double>;

// psi(t) = V exp(-i E t) V^T e_src for the propagator data (V, E).
void propagate(const std::vector<double>& vecs, const std::vector<double>& evals, int n,
               int src_index, double t, Eigen::VectorXcd& psi) {
  Eigen::Map<const Eigen::MatrixXd> v(vecs.data(), n, n);
  Eigen::Map<const Eigen::VectorXd> e(evals.data(), n);
  const Eigen::VectorXd c0 = v.row(src_index).transpose();
  const Eigen::ArrayXd phase = e.array() * t;
  const Eigen::VectorXd re = (c0.array() * phase.cos()).matrix();
  const Eigen::VectorXd im = (-c0.array() * phase.sin()).matrix();
  psi = (v * re).cast<Cplx>() + Cplx(0.0, 1.0) * (v * im).cast<Cplx>();
}

// ---------------------------------------------------------------- single mode

struct OatWorkspace {
  std::vector<int> occ;     // occupation per basis state
  std::vector<int> raise2;  // index of |n+2> or -1
  std::vector<double> vecs;
  std::vector<double> evals;
  int dim = 0;
};

OatWorkspace build_oat(const OatBosonCoeffs& c, int n_max, bool even_sector) {
  OatWorkspace ws;
  for (int n = 0; n <= n_max; ++n)
    if (!even_sector || n % 2 == 0) ws.occ.push_back(n);
  ws.dim = static_cast<int>(ws.occ.size());
  std::vector<int> index(static_cast<std::size_t>(n_max) + 1, -1);
  for (int k = 0; k < ws.dim; ++k) index[static_cast<std::size_t>(ws.occ[k])] = k;
  ws.raise2.assign(static_cast<std::size_t>(ws.dim), -1);
  std::vector<double> h(static_cast<std::size_t>(ws.dim) * ws.dim, 0.0);
  for (int k = 0; k < ws.dim; ++k) {
    const int n = ws.occ[k];
    h[static_cast<std::size_t>(k) * ws.dim + k] = c.c1 * n;
    if (n + 2 <= n_max) {
      const int j = index[static_cast<std::size_t>(n) + 2];
      ws.raise2[static_cast<std::size_t>(k)] = j;
      const double amp = c.c2 * std::sqrt(double(n + 1) * double(n + 2));
      h[static_cast<std::size_t>(k) * ws.dim + j] += amp;
      h[static_cast<std::size_t>(j) * ws.dim + k] += amp;
    }
  }
  symmetric_eigen(h, ws.evals, ws.dim);
  ws.vecs = std::move(h);
  return ws;
}

Quadratures oat_observables(const OatWorkspace& ws, const Eigen::VectorXcd& psi) {
  // <a a> couples |n+2> -> |n>
  Cplx aa(0.0, 0.0);
  double nbar = 0.0;
  for (int k = 0; k < ws.dim; ++k) {
    const int n = ws.occ[static_cast<std::size_t>(k)];
    nbar += std::norm(psi[k]) * n;
    const int j = ws.raise2[static_cast<std::size_t>(k)];
    if (j >= 0) aa += std::conj(psi[k]) * psi[j] * std::sqrt(double(n + 1) * double(n + 2));
  }
  return {2.0 * aa.real(), -2.0 * aa.imag(), 1.0 + 2.0 * nbar};
}

// ----------------------------------------------------------------- two modes

struct DickeWorkspace {
  std::vector<int> na, nb;      // occupations per basis state
  std::vector<int> raise2a;     // |na+2, nb>
  std::vector<int> raise2b;     // |na, nb+2>
  std::vector<double> vecs;
  std::vector<double> evals;
  int dim = 0;
  int src = 0;                  // index of |0,0>
  int cap_a = 0, cap_b = 0;
};

DickeWorkspace build_dicke(const DickeBosonCoeffs& c, int n_max_a, int n_max_b,
                           bool even_sector) {
  DickeWorkspace ws;
  ws.cap_a = n_max_a;
  ws.cap_b = n_max_b;
  std::vector<int> index(static_cast<std::size_t>(n_max_a + 1) * (n_max_b + 1), -1);
  auto flat = [n_max_b](int ia, int ib) {
    return static_cast<std::size_t>(ia) * (n_max_b + 1) + ib;
  };
  for (int ia = 0; ia <= n_max_a; ++ia)
    for (int ib = 0; ib <= n_max_b; ++ib) {
      if (even_sector && (ia + ib) % 2 != 0) continue;
      index[flat(ia, ib)] = static_cast<int>(ws.na.size());
      ws.na.push_back(ia);
      ws.nb.push_back(ib);
    }
  ws.dim = static_cast<int>(ws.na.size());
  ws.src = index[flat(0, 0)];
  std::vector<double> h(static_cast<std::size_t>(ws.dim) * ws.dim, 0.0);
  auto add = [&](int i, int j, double v) {
    h[static_cast<std::size_t>(i) * ws.dim + j] += v;
    h[static_cast<std::size_t>(j) * ws.dim + i] += v;
  };
  ws.raise2a.assign(static_cast<std::size_t>(ws.dim), -1);
  ws.raise2b.assign(static_cast<std::size_t>(ws.dim), -1);
  for (int k = 0; k < ws.dim; ++k) {
    const int ia = ws.na[static_cast<std::size_t>(k)];
    const int ib = ws.nb[static_cast<std::size_t>(k)];
    h[static_cast<std::size_t>(k) * ws.dim + k] = c.omega * ia + c.epsilon_tilde * ib;
    // gamma (a+ b+ + a+ b + h.c.)
    if (ia + 1 <= n_max_a && ib + 1 <= n_max_b) {
      const int j = index[flat(ia + 1, ib + 1)];
      if (j >= 0) add(k, j, c.gamma * std::sqrt(double(ia + 1) * double(ib + 1)));
    }
    if (ia + 1 <= n_max_a && ib - 1 >= 0) {
      const int j = index[flat(ia + 1, ib - 1)];
      if (j >= 0) add(k, j, c.gamma * std::sqrt(double(ia + 1) * double(ib)));
    }
    if (ia + 2 <= n_max_a) ws.raise2a[static_cast<std::size_t>(k)] = index[flat(ia + 2, ib)];
    if (ib + 2 <= n_max_b) ws.raise2b[static_cast<std::size_t>(k)] = index[flat(ia, ib + 2)];
  }
  symmetric_eigen(h, ws.evals, ws.dim);
  ws.vecs = std::move(h);
  return ws;
}

struct DickeSnapshot {
  Quadratures spin;
  Quadratures photon;
  double tail_a;
  double tail_b;
};

DickeSnapshot dicke_observables(const DickeWorkspace& ws, const Eigen::VectorXcd& psi) {
  Cplx aa(0.0, 0.0), bb(0.0, 0.0);
  double na_bar = 0.0, nb_bar = 0.0, tail_a = 0.0, tail_b = 0.0;
  for (int k = 0; k < ws.dim; ++k) {
    const int ia = ws.na[static_cast<std::size_t>(k)];
    const int ib = ws.nb[static_cast<std::size_t>(k)];
    const double p = std::norm(psi[k]);
    na_bar += p * ia;
    nb_bar += p * ib;
    if (ia >= ws.cap_a - 1) tail_a += p;
    if (ib >= ws.cap_b - 1) tail_b += p;
    const int ja = ws.raise2a[static_cast<std::size_t>(k)];
    if (ja >= 0) aa += std::conj(psi[k]) * psi[ja] * std::sqrt(double(ia + 1) * double(ia + 2));
    const int jb = ws.raise2b[static_cast<std::size_t>(k)];
    if (jb >= 0) bb += std::conj(psi[k]) * psi[jb] * std::sqrt(double(ib + 1) * double(ib + 2));
  }
  DickeSnapshot s{};
  s.spin = {2.0 * bb.real(), -2.0 * bb.imag(), 1.0 + 2.0 * nb_bar};
  s.photon = {2.0 * aa.real(), -2.0 * aa.imag(), 1.0 + 2.0 * na_bar};
  s.tail_a = tail_a;
  s.tail_b = tail_b;
  return s;
}

std::size_t even_sector_dimension(int n_max_a, int n_max_b) {
  std::size_t d = 0;
  for (int ia = 0; ia <= n_max_a; ++ia) {
    const int first = (ia % 2 == 0) ? 0 : 1;
    d += static_cast<std::size_t>((n_max_b - first) / 2) + 1;
  }
  return d;
}

}  // namespace

std::size_t FockBasis::dimension() const {
  if (mode_count == 1) {
    if (!even_sector) return static_cast<std::size_t>(n_max) + 1;
    return static_cast<std::size_t>(n_max / 2) + 1;
  }
  if (!even_sector)
    return (static_cast<std::size_t>(cutoff_a()) + 1) * (static_cast<std::size_t>(cutoff_b()) + 1);
  return even_sector_dimension(cutoff_a(), cutoff_b());
}

double OracleState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

std::string to_json_string(const ConvergenceRecord& rec) {
  nlohmann::json j;
  j["converged"] = rec.converged;
  if (!rec.note.empty()) j["note"] = rec.note;
  auto& arr = j["entries"] = nlohmann::json::array();
  for (const auto& e : rec.entries) {
    nlohmann::json je;
    je["n_max"] = e.n_max_b > 0 ? nlohmann::json::array({e.n_max_a, e.n_max_b})
                                : nlohmann::json(e.n_max_a);
    je["observable"] = e.observable;
    je["value"] = e.value;
    je["delta_on_doubling"] = e.delta_on_doubling;
    arr.push_back(std::move(je));
  }
  return j.dump();
}

std::vector<Quadratures> fock_evolve_oat_at(const OatBosonCoeffs& c, std::span<const double> times,
                                            int n_max, bool even_sector) {
  if (n_max < 8) throw std::invalid_argument("fock_evolve_oat_at: n_max must be >= 8");
  if (!(std::abs(2.0 * c.c2 / c.c1) < 1.0))
    throw CriticalSingularity("fock_evolve_oat_at: |2 c2/c1| >= 1");
  const auto ws = build_oat(c, n_max, even_sector);
  std::vector<Quadratures> out;
  out.reserve(times.size());
  Eigen::VectorXcd psi;
  for (const double t : times) {
    propagate(ws.vecs, ws.evals, ws.dim, 0, t, psi);
    out.push_back(oat_observables(ws, psi));
  }
  return out;
}

OracleState fock_evolve_oat_state(const OatBosonCoeffs& c, double t, int n_max,
                                  bool even_sector) {
  const auto ws = build_oat(c, n_max, even_sector);
  Eigen::VectorXcd psi;
  propagate(ws.vecs, ws.evals, ws.dim, 0, t, psi);
  OracleState st;
  st.basis = FockBasis{1, n_max, -1, even_sector};
  st.amplitudes.assign(psi.data(), psi.data() + psi.size());
  st.time = t;
  return st;
}

OatOracleResult fock_evolve_oat(const OatBosonCoeffs& c, std::span<const double> times,
                                const OracleOptions& opts) {
  std::vector<std::vector<Quadratures>> keep;
  auto eval = [&](int n_max) {
    if (FockBasis{1, n_max, -1, true}.dimension() > opts.dim_limit)
      throw ConvergenceFailure("fock_evolve_oat: dimension guard exceeded at n_max=" +
                               std::to_string(n_max));
    keep.push_back(fock_evolve_oat_at(c, times, n_max, true));
    std::vector<double> flat;
    flat.reserve(keep.back().size() * 3);
    for (const auto& q : keep.back()) {
      flat.push_back(q.a);
      flat.push_back(q.b);
      flat.push_back(q.c);
    }
    return flat;
  };
  auto res = convergence_doubling(eval, opts.start_n_max, opts.tol, opts.max_growth_steps,
                                  {"A", "B", "C"});
  OatOracleResult out;
  out.values = std::move(keep.back());
  // compress the per-point record into one entry per observable per doubling
  ConvergenceRecord rec;
  rec.converged = res.record.converged;
  const std::size_t npts = times.size();
  for (std::size_t base = 0; base + 3 * npts <= res.record.entries.size(); base += 3 * npts) {
    double worst[3] = {0.0, 0.0, 0.0};
    double val[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < npts; ++i)
      for (int obs = 0; obs < 3; ++obs) {
        const auto& e = res.record.entries[base + 3 * i + obs];
        if (e.delta_on_doubling >= worst[obs]) worst[obs] = e.delta_on_doubling;
        val[obs] = e.value;
      }
    const int n_here = res.record.entries[base].n_max_a;
    const char* obs_names[3] = {"A", "B", "C"};
    for (int obs = 0; obs < 3; ++obs)
      rec.entries.push_back({n_here, 0, obs_names[obs], val[obs], worst[obs]});
  }
  out.record = std::move(rec);
  return out;
}

DickeOracleResult fock_evolve_dicke(const DickeBosonCoeffs& c, std::span<const double> times,
                                    const OracleOptions& opts) {
  // geometric growth guided by per-mode boundary occupation mass, stopped on
  // the projected truncation error (successive change scaled by the measured
  // contraction ratio)
  const double tail_tol = 1e-14;
  int na = opts.start_n_max, nb = opts.start_n_max;
  DickeOracleResult out;
  ConvergenceRecord& rec = out.record;
  std::vector<Quadratures> prev_spin, prev_photon;
  double prev_change = -1.0;
  for (int step = 0; step < opts.max_growth_steps; ++step) {
    if (even_sector_dimension(na, nb) > opts.dim_limit) {
      rec.note = "dimension guard exceeded at n_max=(" + std::to_string(na) + "," +
                 std::to_string(nb) + ")";
      throw ConvergenceFailure("fock_evolve_dicke: " + rec.note + " " + to_json_string(rec));
    }
    std::vector<Quadratures> spin, photon;
    double tail_a = 0.0, tail_b = 0.0;
    {
      const auto ws = build_dicke(c, na, nb, true);
      Eigen::VectorXcd psi;
      for (const double t : times) {
        propagate(ws.vecs, ws.evals, ws.dim, ws.src, t, psi);
        const auto snap = dicke_observables(ws, psi);
        spin.push_back(snap.spin);
        photon.push_back(snap.photon);
        tail_a = std::max(tail_a, snap.tail_a);
        tail_b = std::max(tail_b, snap.tail_b);
      }
    }
    double change = -1.0;
    if (!prev_spin.empty()) {
      change = 0.0;
      for (std::size_t i = 0; i < spin.size(); ++i) {
        change = std::max(change, std::abs(spin[i].a - prev_spin[i].a));
        change = std::max(change, std::abs(spin[i].b - prev_spin[i].b));
        change = std::max(change, std::abs(spin[i].c - prev_spin[i].c));
        change = std::max(change, std::abs(photon[i].a - prev_photon[i].a));
        change = std::max(change, std::abs(photon[i].b - prev_photon[i].b));
        change = std::max(change, std::abs(photon[i].c - prev_photon[i].c));
      }
    }
    const char* names[6] = {"A_s", "B_s", "C_s", "A_p", "B_p", "C_p"};
    const double back_vals[6] = {spin.back().a,   spin.back().b,   spin.back().c,
                                 photon.back().a, photon.back().b, photon.back().c};
    for (int obs = 0; obs < 6; ++obs)
      rec.entries.push_back({na, nb, names[obs], back_vals[obs], change < 0 ? 0.0 : change});

    const bool tails_ok = tail_a < tail_tol && tail_b < tail_tol;
    if (change >= 0.0 && tails_ok) {
      double projected = change;
      if (prev_change > 0.0 && change < prev_change)
        projected = change * (change / prev_change);
      if (projected < opts.tol) {
        rec.converged = true;
        out.spin = std::move(spin);
        out.photon = std::move(photon);
        return out;
      }
    }
    prev_change = change;
    prev_spin = std::move(spin);
    prev_photon = std::move(photon);
    auto grow = [](int n) { return std::max(n + 2, static_cast<int>(std::ceil(n * 1.4 / 2.0)) * 2); };
    const bool grow_a = tail_a >= tail_tol;
    const bool grow_b = tail_b >= tail_tol;
    if (grow_a) na = grow(na);
    if (grow_b) nb = grow(nb);
    if (!grow_a && !grow_b) {
      // tails quiet but observables not settled: widen both
      na = grow(na);
      nb = grow(nb);
    }
  }
  rec.note = "growth budget exhausted";
  throw ConvergenceFailure("fock_evolve_dicke: " + to_json_string(rec));
}

void fock_evolve_dicke_at(const DickeBosonCoeffs& c, std::span<const double> times, int n_max_a,
                          int n_max_b, bool even_sector, std::vector<Quadratures>& spin,
                          std::vector<Quadratures>& photon) {
  if (n_max_a < 8 || n_max_b < 8)
    throw std::invalid_argument("fock_evolve_dicke_at: cutoffs must be >= 8");
  const auto ws = build_dicke(c, n_max_a, n_max_b, even_sector);
  spin.clear();
  photon.clear();
  Eigen::VectorXcd psi;
  for (const double t : times) {
    propagate(ws.vecs, ws.evals, ws.dim, ws.src, t, psi);
    const auto snap = dicke_observables(ws, psi);
    spin.push_back(snap.spin);
    photon.push_back(snap.photon);
  }
}

std::vector<double> spin_ed_oat(const OatParams& p, double j_finite, const Phase& phase,
                                std::span<const double> times) {
  if (!(j_finite >= 1.0)) throw std::invalid_argument("spin_ed_oat: j_finite must be >= 1");
  if (classify_phase(p.xi()).label != phase.label)
    throw std::invalid_argument("spin_ed_oat: phase label inconsistent with xi");
  const double two_j = 2.0 * j_finite;
  if (std::abs(two_j - std::round(two_j)) > 1e-9)
    throw std::invalid_argument("spin_ed_oat: 2 J must be an integer");
  const int dim = static_cast<int>(std::round(two_j)) + 1;
  const double xi = p.xi();

  // units 2 kappa J = 1
  const double kappa = 1.0 / (2.0 * j_finite);
  Eigen::MatrixXd sx = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd mz(dim);
  for (int k = 0; k < dim; ++k) mz[k] = -j_finite + k;
  for (int k = 0; k + 1 < dim; ++k) {
    const double amp = 0.5 * std::sqrt(j_finite * (j_finite + 1.0) - mz[k] * (mz[k] + 1.0));
    sx(k + 1, k) = amp;
    sx(k, k + 1) = amp;
  }
  Eigen::MatrixXd h = -kappa * (sx * sx);
  h.diagonal() += xi * mz;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::VectorXd& e = es.eigenvalues();

  // mean-field coherent state, + branch: <Sx> = +J sin(theta), <Sz> = -J cos(theta).
  // Spin-coherent amplitudes at polar angle pi - theta, in log space.
  const double theta = oat_rotation_angle(p);
  const double big_theta = std::numbers::pi - theta;
  Eigen::VectorXd init(dim);
  const double lc = std::log(std::abs(std::cos(big_theta / 2.0)) + 1e-300);
  const double ls = std::log(std::abs(std::sin(big_theta / 2.0)) + 1e-300);
  for (int k = 0; k < dim; ++k) {
    const double jm = j_finite + mz[k];  // = k
    const double lbinom = std::lgamma(two_j + 1.0) - std::lgamma(jm + 1.0) -
                          std::lgamma(two_j - jm + 1.0);
    init[k] = std::exp(0.5 * lbinom + jm * lc + (two_j - jm) * ls);
  }
  init.normalize();

  const Eigen::VectorXd c0 = v.transpose() * init;
  Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    const Cplx amp(0.0, sx(k + 1, k));
    sy(k + 1, k) = -amp;  // Sy = (S+ - S-) / 2i
    sy(k, k + 1) = amp;
  }

  std::vector<double> zetas;
  zetas.reserve(times.size());
  for (const double t : times) {
    const Eigen::ArrayXd phase_arg = e.array() * t;
    Eigen::VectorXcd psi =
        (v * (c0.array() * phase_arg.cos()).matrix()).cast<Cplx>() +
        Cplx(0.0, 1.0) * (v * (-c0.array() * phase_arg.sin()).matrix()).cast<Cplx>();

    auto expval = [&](const Eigen::MatrixXcd& op) { return (psi.adjoint() * op * psi)(0, 0); };
    const Eigen::MatrixXcd sxc = sx.cast<Cplx>();
    Eigen::MatrixXcd szc = Eigen::MatrixXcd::Zero(dim, dim);
    szc.diagonal() = mz.cast<Cplx>();

    const double mx = expval(sxc).real();
    const double my = expval(sy).real();
    const double mzv = expval(szc).real();
    Eigen::Vector3d n(mx, my, mzv);
    n.normalize();
    Eigen::Vector3d aux = std::abs(n.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    Eigen::Vector3d e1 = n.cross(aux).normalized();
    Eigen::Vector3d e2 = n.cross(e1);

    const Eigen::MatrixXcd j1 = e1.x() * sxc + e1.y() * sy + e1.z() * szc;
    const Eigen::MatrixXcd j2 = e2.x() * sxc + e2.y() * sy + e2.z() * szc;
    const double m1 = expval(j1).real();
    const double m2 = expval(j2).real();
    const double v11 = expval(j1 * j1).real() - m1 * m1;
    const double v22 = expval(j2 * j2).real() - m2 * m2;
    const double v12 = 0.5 * (expval(j1 * j2) + expval(j2 * j1)).real() - m1 * m2;
    const double vmin =
        0.5 * (v11 + v22) - std::sqrt(0.25 * (v11 - v22) * (v11 - v22) + v12 * v12);
    zetas.push_back(std::sqrt(std::max(vmin, 0.0) / (j_finite / 2.0)));
  }
  return zetas;
}

}  // namespace sqz

#include "sqz/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sqz/errors.hpp"

namespace sqz {

namespace {

struct LineFit {
  double intercept, slope, rms, r2;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::domain_error("least_squares: degenerate abscissae");
  LineFit f{};
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += r * r;
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  f.rms = std::sqrt(ss_res / n);
  f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

std::vector<SweepRecord> sorted_checked(std::span<const SweepRecord> records, const char* who) {
  if (records.size() < 5)
    throw std::domain_error(std::string(who) + ": need at least 5 records");
  std::vector<SweepRecord> recs(records.begin(), records.end());
  const PhaseLabel side = recs.front().side;
  for (const auto& r : recs) {
    if (r.side != side)
      throw std::domain_error(std::string(who) + ": records must come from a single side");
    if (!(r.delta > 0.0))
      throw std::domain_error(std::string(who) + ": delta must be > 0");
  }
  std::sort(recs.begin(), recs.end(),
            [](const SweepRecord& a, const SweepRecord& b) { return a.delta < b.delta; });
  return recs;
}

// three-point parabolic refinement around a discrete minimum
void refine_parabolic(double tm, double t0, double tp, double ym, double y0, double yp,
                      double& t_out, double& y_out) {
  const double denom = ym - 2.0 * y0 + yp;
  t_out = t0;
  y_out = y0;
  if (denom > 0.0) {
    const double h = 0.5 * (tp - tm);           // uniform grid step
    const double dx = 0.5 * (ym - yp) / denom;  // vertex offset in grid units
    t_out = t0 + dx * h;
    y_out = y0 - 0.25 * (ym - yp) * dx;
  }
}

}  // namespace

ScalingFit fit_powerlaw(std::span<const SweepRecord> records) {
  const auto recs = sorted_checked(records, "fit_powerlaw");
  std::vector<double> lx, ly;
  for (const auto& r : recs) {
    if (!(r.value > 0.0) || !std::isfinite(r.value))
      throw std::domain_error("fit_powerlaw: values must be finite and > 0");
    lx.push_back(std::log(r.delta));
    ly.push_back(std::log(r.value));
  }
  const auto f = least_squares(lx, ly);
  ScalingFit out;
  out.model = FitModel::powerlaw;
  out.exponent = f.slope;
  out.amplitude = std::exp(f.intercept);
  out.residual_norm = f.rms;
  out.r_squared = f.r2;
  out.window_lo = recs.front().delta;
  out.window_hi = recs.back().delta;
  out.side = recs.front().side;
  out.span_warning = out.window_hi / out.window_lo < 100.0 * (1.0 - 1e-9);
  return out;
}

ScalingFit fit_affine_square(std::span<const SweepRecord> records) {
  const auto recs = sorted_checked(records, "fit_affine_square");
  std::vector<double> x, y;
  for (const auto& r : recs) {
    if (!(r.value > 0.0) || !std::isfinite(r.value))
      throw std::domain_error("fit_affine_square: values must be finite and > 0");
    x.push_back(r.delta);
    y.push_back(r.value * r.value);
  }
  const auto f = least_squares(x, y);
  ScalingFit out;
  out.model = FitModel::affine_square;
  out.u = f.intercept;
  out.v = f.slope;
  out.residual_norm = f.rms;
  out.r_squared = f.r2;
  out.window_lo = recs.front().delta;
  out.window_hi = recs.back().delta;
  out.side = recs.front().side;
  if (out.u < 0.0) {
    out.u = 0.0;
    out.u_clamped = true;
  }
  return out;
}

double extract_period(std::span<const double> times, std::span<const double> zeta) {
  if (times.size() != zeta.size() || times.size() < 3)
    throw std::invalid_argument("extract_period: mismatched or too-short trace");
  std::vector<double> minima_t;
  for (std::size_t i = 1; i + 1 < zeta.size(); ++i) {
    if (zeta[i] <= zeta[i - 1] && zeta[i] < zeta[i + 1]) {
      double t_ref, y_ref;
      refine_parabolic(times[i - 1], times[i], times[i + 1], zeta[i - 1], zeta[i], zeta[i + 1],
                       t_ref, y_ref);
      minima_t.push_back(t_ref);
    }
  }
  if (minima_t.size() < 2)
    throw InsufficientSpan("extract_period: trace spans fewer than two zeta minima");
  double sum = 0.0;
  for (std::size_t i = 1; i < minima_t.size(); ++i) sum += minima_t[i] - minima_t[i - 1];
  return sum / static_cast<double>(minima_t.size() - 1);
}

double extract_period(const QuadratureTrace& trace) {
  return extract_period(trace.times, trace.zeta);
}

MinimumEstimate extract_zeta_min(std::span<const double> times, std::span<const double> zeta) {
  if (times.size() != zeta.size() || times.size() < 2)
    throw std::invalid_argument("extract_zeta_min: mismatched or too-short trace");
  std::size_t k = 0;
  for (std::size_t i = 1; i < zeta.size(); ++i)
    if (zeta[i] < zeta[k]) k = i;
  MinimumEstimate est;
  if (k == 0 || k + 1 == zeta.size()) {
    est.value = zeta[k];
    est.t_at = times[k];
    est.at_boundary = true;
    return est;
  }
  refine_parabolic(times[k - 1], times[k], times[k + 1], zeta[k - 1], zeta[k], zeta[k + 1],
                   est.t_at, est.value);
  est.at_boundary = false;
  return est;
}

MinimumEstimate extract_zeta_min(const QuadratureTrace& trace) {
  return extract_zeta_min(trace.times, trace.zeta);
}

}  // namespace sqz

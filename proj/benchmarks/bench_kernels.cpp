#include <benchmark/benchmark.h>

#include "sqz/detail/dicke_kernels.hpp"
#include "sqz/detail/extended.hpp"
#include "sqz/dicke.hpp"
#include "sqz/oat.hpp"
#include "sqz/oracle.hpp"
#include "sqz/params.hpp"

namespace {

static void OatZetaStable(benchmark::State& state) {
  const auto p = sqz::OatParams::from_xi(0.998);
  const auto phase = sqz::classify_phase(p.xi());
  double t = 0.0;
  for (auto _ : state) {
    t += 0.37;
    benchmark::DoNotOptimize(sqz::oat_zeta(p, phase, t).zeta);
  }
}
BENCHMARK(OatZetaStable);

static void DickeAbcDouble(benchmark::State& state) {
  const auto p = sqz::DickeParams::from_reduced(1.05, 2.944);
  const auto coeffs = sqz::dicke_boson_coefficients(p, sqz::classify_phase(p.xi()));
  const auto cache = sqz::detail::make_angle_cache(
      sqz::detail::make_angle_set<double>(coeffs.omega, coeffs.epsilon_tilde, coeffs.gamma));
  double t = 0.0;
  for (auto _ : state) {
    t += 0.37;
    benchmark::DoNotOptimize(sqz::detail::dicke_abc_spin_kernel(cache, t));
  }
}
BENCHMARK(DickeAbcDouble);

static void DickeAbcExtended(benchmark::State& state) {
  using sqz::Real50;
  const auto p = sqz::DickeParams::from_reduced(1.0001, 2.944);
  const auto coeffs = sqz::dicke_boson_coefficients(p, sqz::classify_phase(p.xi()));
  const auto cache = sqz::detail::make_angle_cache(sqz::detail::make_angle_set<Real50>(
      Real50(coeffs.omega), Real50(coeffs.epsilon_tilde), Real50(coeffs.gamma)));
  double t = 0.0;
  for (auto _ : state) {
    t += 0.37;
    benchmark::DoNotOptimize(sqz::detail::dicke_abc_spin_kernel(cache, Real50(t)));
  }
}
BENCHMARK(DickeAbcExtended);

static void OatFockOracle(benchmark::State& state) {
  const auto p = sqz::OatParams::from_xi(1.2);
  const auto coeffs = sqz::oat_boson_coefficients(p, sqz::classify_phase(p.xi()));
  const double times[4] = {0.5, 1.0, 1.5, 2.0};
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqz::fock_evolve_oat_at(coeffs, times, n_max));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(OatFockOracle)->RangeMultiplier(2)->Range(64, 512)->Complexity();

}  // namespace

BENCHMARK_MAIN();

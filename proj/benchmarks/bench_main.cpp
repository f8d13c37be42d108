#include <benchmark/benchmark.h>

#include <gravrabi/exact.hpp>
#include <gravrabi/oracle.hpp>
#include <gravrabi/sim.hpp>
#include <gravrabi/specfun.hpp>

using namespace gravrabi;

namespace {

PhysicalParams rb_like() {
  PhysicalParams p;
  p.energy_excited = 2.5461e-19;
  p.mass = 1.443e-25;
  p.wave_number = 8.05e6;
  p.accel = 9.81;
  const double tau = 1 / std::sqrt(p.wave_number * p.accel);
  p.rabi = 1 / tau;
  p.laser_freq = p.energy_excited / kHbar + p.wave_number * (kHbar * p.wave_number / 2) / p.mass;
  return p;
}

void BM_ln_gamma(benchmark::State& st) {
  const Complex z(3.7, -2.1);
  for (auto _ : st) benchmark::DoNotOptimize(specfun::complex_ln_gamma(z));
}
BENCHMARK(BM_ln_gamma);

void BM_kummer_series(benchmark::State& st) {
  const Complex a(0.25, 0.5), b(0.5, 0.0), z(0.0, 12.0);
  for (auto _ : st) benchmark::DoNotOptimize(specfun::kummer_1f1(a, b, z));
}
BENCHMARK(BM_kummer_series);

void BM_kummer_asymptotic(benchmark::State& st) {
  const Complex a(0.25, 0.5), b(0.5, 0.0), z(0.0, 60.0);
  for (auto _ : st) benchmark::DoNotOptimize(specfun::kummer_1f1(a, b, z));
}
BENCHMARK(BM_kummer_asymptotic);

void BM_weber_u(benchmark::State& st) {
  const Complex alpha(-0.5, 0.25), y(1.5, -1.5);
  for (auto _ : st) benchmark::DoNotOptimize(specfun::pcf_u(alpha, y));
}
BENCHMARK(BM_weber_u);

void BM_w_evaluator_setup(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(exact::WEvaluator(1.0, 1));
}
BENCHMARK(BM_w_evaluator_setup);

void BM_w_evaluate(benchmark::State& st) {
  const exact::WEvaluator ev(1.0, 1);
  const double s = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ev(0.3, s));
}
BENCHMARK(BM_w_evaluate)->Arg(1)->Arg(8)->Arg(50);

void BM_ode_w(benchmark::State& st) {
  oracle::IntegratorConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  for (auto _ : st) benchmark::DoNotOptimize(oracle::ode_w(0.3, 1.0, 8.0, 1, cfg));
}
BENCHMARK(BM_ode_w);

void BM_evolve_packet(benchmark::State& st) {
  const PhysicalParams p = rb_like();
  const double hk = kHbar * p.wave_number;
  const sim::MomentumGrid g =
      sim::commensurate_grid(hk, static_cast<int>(st.range(0)), -2 * hk, 3 * hk, 0);
  const sim::SpinorPacket pkt = sim::gaussian_packet(g, 0, 0.05 * hk);
  const double t = sim::snap_time(g, p, 5e-4);
  sim::EvolveOptions opt;
  opt.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(sim::evolve_packet(pkt, p, t, opt));
  st.SetItemsProcessed(st.iterations() * g.n_points);
}
BENCHMARK(BM_evolve_packet)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

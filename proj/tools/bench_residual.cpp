// Times the OpenMP sample sweep against the serial reference path and
// verifies that both produce bit-identical residuals.

#include <chrono>
#include <cstdio>

#include "diracspin/checks.hpp"
#include "diracspin/zbw.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main() {
  ds::SampleConfig cfg;
  cfg.count = 400;
  const std::vector<ds::Momentum> samples = ds::sample_momenta(cfg);

  const ds::VecOp s_c = ds::spin_operator(ds::SpinName::PryceC, cfg.mass);
  const ds::VecOp s_fw = ds::spin_operator(ds::SpinName::FW, cfg.mass);

  auto t0 = Clock::now();
  const ds::OpResidual rs = ds::vecop_residual(s_c, s_fw, samples, ds::Exec::Serial);
  auto t1 = Clock::now();
  const ds::OpResidual rp = ds::vecop_residual(s_c, s_fw, samples, ds::Exec::Parallel);
  auto t2 = Clock::now();

  std::printf("vecop_residual over %d samples\n", cfg.count);
  std::printf("  serial   %8.3f s  residual %.17g\n", seconds(t0, t1), rs.max_residual);
  std::printf("  parallel %8.3f s  residual %.17g\n", seconds(t1, t2), rp.max_residual);
  std::printf("  speedup  %8.2fx  identical %s\n", seconds(t0, t1) / seconds(t1, t2),
              rs.max_residual == rp.max_residual ? "yes" : "NO");

  ds::ZbwConfig zc;
  zc.n_steps = 200;
  auto t3 = Clock::now();
  const ds::TimeSeries zs = ds::run_zbw(zc, ds::Exec::Serial);
  auto t4 = Clock::now();
  const ds::TimeSeries zp = ds::run_zbw(zc, ds::Exec::Parallel);
  auto t5 = Clock::now();
  bool same = zs.rows.size() == zp.rows.size();
  for (std::size_t i = 0; same && i < zs.rows.size(); ++i)
    same = zs.rows[i].x_dirac == zp.rows[i].x_dirac &&
           zs.rows[i].x_fw == zp.rows[i].x_fw;

  std::printf("wavepacket run, %d grid points x %d steps\n", zc.n, zc.n_steps);
  std::printf("  serial   %8.3f s\n", seconds(t3, t4));
  std::printf("  parallel %8.3f s\n", seconds(t4, t5));
  std::printf("  speedup  %8.2fx  identical %s\n", seconds(t3, t4) / seconds(t4, t5),
              same ? "yes" : "NO");

  return (rs.max_residual == rp.max_residual && same) ? 0 : 1;
}

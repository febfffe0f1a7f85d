// Acceptance gate: one printed pass/fail line per criterion, default
// configuration (m = 1, 200 samples + 7 special points, seed 42).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>

#include "diracspin/checks.hpp"
#include "diracspin/zbw.hpp"

using namespace ds;

namespace {

const SampleConfig kCfg{};  // defaults: m=1, seed=42, 200 samples

bool report(int number, const char* title, bool ok) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", number, title);
  std::fflush(stdout);
  return ok;
}

bool check_passes(const char* id, double tol = 1e-10) {
  const CheckResult r = run_check(id, kCfg, tol);
  if (!r.pass)
    std::printf("      %s residual %.3e at p=(%.4g, %.4g, %.4g)\n", id,
                r.max_residual, r.worst_sample.p[0], r.worst_sample.p[1],
                r.worst_sample.p[2]);
  return r.pass;
}

}  // namespace

TEST_CASE("1: Pryce (e) / Foldy-Wouthuysen equivalence chain") {
  const bool ok = check_passes("PRYCEE_EQ_FW") && check_passes("QE_DEF_EQ_CLOSED");
  CHECK(report(1, "S_PRYCE_E = S_FW and Q_PRYCE_E (both routes) = X_FW", ok));
}

TEST_CASE("2: Bogolubov and Newton-Wigner reduction") {
  const bool ok = check_passes("BG_IS_PAULI", 1e-12) && check_passes("NW_EQ_BG", 1e-12);
  CHECK(report(2, "S_BG = Sigma/2 and S_NW = S_BG at 1e-12", ok));
}

TEST_CASE("3: Pryce (e) commutation relations") {
  const bool ok = check_passes("QE_LOCAL") && check_passes("QE_CANONICAL") &&
                  check_passes("QE_SPIN_COMMUTE") && check_passes("SU2_PRYCE_E");
  CHECK(report(3, "[q,q]=0, [q,P]=i delta, [q,S]=0, su(2) for S_(e)", ok));
}

TEST_CASE("4: Foldy-Wouthuysen block") {
  const bool ok = check_passes("FW_UNITARY") && check_passes("HFW_DIAGONAL") &&
                  check_passes("UP_EQ_BETA_UFW") && check_passes("SFW_CONSERVED");
  CHECK(report(4, "U_FW unitary, H -> beta E, U_P = beta U_FW, [S_FW,H]=0", ok));
}

TEST_CASE("5: Poincare closure and Pauli-Lubanski contraction") {
  const bool ok = check_passes("POINCARE_CLOSURE") && check_passes("PL_DEF_EQ_CLOSED");
  CHECK(report(5, "Poincare algebra closes; epsilon contraction is order 0", ok));
}

TEST_CASE("6: discrepancy demonstrations") {
  const bool ok = check_passes("X_HD_COMM") && check_passes("ALPHA_NEQ_P_OVER_E") &&
                  check_passes("CM_NEQ_PRYCEC") && check_passes("HD_NONCOVARIANT");
  CHECK(report(6, "[x,H]=i alpha but alpha != P/E; R_CM != Q_PRYCE_C; H not covariant", ok));
}

TEST_CASE("7: Pryce (c) spin algebra structure constant") {
  const bool ok = check_passes("SC_ALGEBRA");
  CHECK(report(7, "longitudinal structure constant of S_(c) equals m^2/E^2", ok));
}

TEST_CASE("8: boost block") {
  const bool ok = check_passes("BOOST_METRIC") && check_passes("BOOST_INVERSE") &&
                  check_passes("EQ4_REPRODUCED");
  CHECK(report(8, "metric preserved, L(p)^-1 = L(-p), rest-frame spatial formula", ok));
}

TEST_CASE("9: Zitterbewegung wavepacket dynamics") {
  const auto start = std::chrono::steady_clock::now();
  ZbwConfig cfg;  // defaults: eta=0.5, grid [-6,6] x 1024, t up to 50
  const TimeSeries mixed = run_zbw(cfg);
  ZbwConfig pure_cfg = cfg;
  pure_cfg.eta = 0.0;
  const TimeSeries pure = run_zbw(pure_cfg);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::vector<double> t, xd, xf, x0;
  double nlo = 1e300, nhi = -1e300, elo = 1e300, ehi = -1e300, vmax = 0.0;
  for (std::size_t i = 0; i < mixed.rows.size(); ++i) {
    const TimeSeriesRow& r = mixed.rows[i];
    t.push_back(r.t);
    xd.push_back(r.x_dirac);
    xf.push_back(r.x_fw);
    x0.push_back(pure.rows[i].x_dirac);
    nlo = std::min(nlo, r.norm);
    nhi = std::max(nhi, r.norm);
    elo = std::min(elo, r.energy);
    ehi = std::max(ehi, r.energy);
    if (i)
      vmax = std::max(vmax, std::abs((xd[i] - xd[i - 1]) / (t[i] - t[i - 1])));
  }
  const double amp = linear_fit(t, xd).max_abs_residual;
  const double amp_fw = linear_fit(t, xf).max_abs_residual;
  const double amp0 = linear_fit(t, x0).max_abs_residual;
  const double bin = 2.0 * M_PI / (t.back() - t.front());
  const double freq = dominant_frequency(t, xd);

  const bool ok = amp > 1e-3 && std::abs(freq - 2.0 * cfg.mass) <= bin &&
                  amp_fw < 1e-6 && amp0 < 1e-8 && nhi - nlo < 1e-10 &&
                  ehi - elo < 1e-10 && vmax <= 1.0 + 1e-6 && elapsed < 30.0;
  if (!ok)
    std::printf("      amp=%.3e freq=%.6f fw=%.3e eta0=%.3e drift=(%.1e,%.1e) v=%.6f %.1fs\n",
                amp, freq, amp_fw, amp0, nhi - nlo, ehi - elo, vmax, elapsed);
  CHECK(report(9, "oscillation at 2m for mixed packet, none for FW/pure; bounded speed", ok));
}

TEST_CASE("10: autodiff against finite differences on the full catalog") {
  SampleConfig cfg = kCfg;
  cfg.count = 50;
  cfg.include_special = false;  // derivative checks need |p| > 0
  const std::vector<Momentum> qs = sample_momenta(cfg);

  std::vector<MatFn> fns;
  auto take = [&](const MatFn& f) {
    if (!f.is_zero()) fns.push_back(f);
  };
  auto take_op = [&](const DiffOp& o) {
    take(o.A);
    for (const MatFn& b : o.B) take(b);
    for (const auto& row : o.C)
      for (const MatFn& c : row) take(c);
  };
  for (const std::string& name : operator_names()) {
    const NamedOperator named = lookup_operator(name, cfg.mass);
    if (const auto* v = std::get_if<VecOp>(&named.op))
      for (const DiffOp& o : *v) take_op(o);
    else if (const auto* d = std::get_if<DiffOp>(&named.op))
      take_op(*d);
    else
      take(std::get<MatFn>(named.op));
  }

  const double h = 1e-5;
  double worst = 0.0;
  for (const MatFn& f : fns)
    for (const Momentum& q : qs) {
      const MatFnValue ad = matfn_eval(f, q);
      for (int k = 0; k < 3; ++k) {
        Momentum lo = q, hi = q;
        lo.p[k] -= h;
        hi.p[k] += h;
        const Mat4 a = f.value(lo);
        const Mat4 b = f.value(hi);
        for (int i = 0; i < 16; ++i)
          worst = std::max(worst,
                           std::abs((b.a[i] - a.a[i]) / (2.0 * h) -
                                    ad.partials[k].a[i]));
      }
    }
  const bool ok = worst < 1e-7;
  if (!ok) std::printf("      worst partial defect %.3e\n", worst);
  CHECK(report(10, "jet partials match central differences on every catalog function", ok));
}

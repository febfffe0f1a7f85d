#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "diracspin/zbw.hpp"

using namespace ds;

namespace {

ZbwConfig quick_cfg() {
  ZbwConfig cfg;
  cfg.n = 512;
  cfg.n_steps = 400;
  cfg.t_max = 25.0;
  return cfg;
}

// energy projector defect: ||(I -+ H/E)/2 psi|| summed over the grid
double projector_defect(const WavePacket& pk, int sign) {
  const GammaSet& g = gammas();
  double worst = 0.0;
  for (int j = 0; j < pk.n(); ++j) {
    const double p = pk.p_at(j);
    const double e = std::sqrt(p * p + pk.m * pk.m);
    const Mat4 h = p * g.alpha[2] + pk.m * g.beta;
    std::array<Cx, 4> r{};
    for (int a = 0; a < 4; ++a) {
      r[a] = 0.5 * pk.values[j][a];
      for (int b = 0; b < 4; ++b)
        r[a] += 0.5 * static_cast<double>(sign) / e * h(a, b) * pk.values[j][b];
    }
    double n2 = 0.0;
    for (const Cx& c : r) n2 += std::norm(c);
    worst = std::max(worst, std::sqrt(n2));
  }
  return worst;
}

double packet_dist(const WavePacket& a, const WavePacket& b) {
  double worst = 0.0;
  for (int j = 0; j < a.n(); ++j)
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(a.values[j][i] - b.values[j][i]));
  return worst;
}

}  // namespace

TEST_CASE("packet initialization") {
  ZbwConfig cfg = quick_cfg();

  SUBCASE("pure positive energy annihilated by the lower projector") {
    cfg.eta = 0.0;
    const WavePacket pk = init_packet(cfg);
    CHECK(projector_defect(pk, -1) < 1e-12);
    CHECK(std::abs(packet_norm2(pk) - 1.0) < 1e-12);
  }

  SUBCASE("pure negative energy annihilated by the upper projector") {
    cfg.eta = 1.0;
    const WavePacket pk = init_packet(cfg);
    CHECK(projector_defect(pk, +1) < 1e-12);
    CHECK(std::abs(packet_norm2(pk) - 1.0) < 1e-12);
  }

  SUBCASE("mixed packet is normalized") {
    const WavePacket pk = init_packet(cfg);
    CHECK(std::abs(packet_norm2(pk) - 1.0) < 1e-12);
  }

  SUBCASE("invalid configurations are rejected") {
    ZbwConfig bad = cfg;
    bad.sigma_p = 2.0;  // 8 sigma does not fit in [-6, 6]
    CHECK_THROWS_AS((void)init_packet(bad), ConfigError);
    bad = cfg;
    bad.eta = 1.5;
    CHECK_THROWS_AS((void)init_packet(bad), ConfigError);
    bad = cfg;
    bad.mass = 0.0;
    CHECK_THROWS_AS((void)init_packet(bad), ConfigError);
  }
}

TEST_CASE("evolution is exact and unitary") {
  const ZbwConfig cfg = quick_cfg();
  const WavePacket pk = init_packet(cfg);

  SUBCASE("t = 0 is the identity") {
    CHECK(packet_dist(evolve(pk, 0.0), pk) == 0.0);
  }

  SUBCASE("evolution is reversible") {
    const WavePacket back = evolve(evolve(pk, 7.3), -7.3);
    CHECK(packet_dist(back, pk) < 1e-12);
  }

  SUBCASE("norm is conserved pointwise") {
    const WavePacket fwd = evolve(pk, 13.7);
    CHECK(std::abs(packet_norm2(fwd) - 1.0) < 1e-12);
  }

  SUBCASE("eigenstate acquires a pure phase") {
    // single-point packet on the positive-energy branch
    ZbwConfig one = cfg;
    one.eta = 0.0;
    WavePacket single = init_packet(one);
    const int mid = single.n() / 2;
    const double p = single.p_at(mid);
    const double e = std::sqrt(p * p + 1.0);
    const double t = 2.1;
    const WavePacket ev = evolve(single, t);
    const Cx phase(std::cos(e * t), -std::sin(e * t));
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(ev.values[mid][i] - phase * single.values[mid][i]) < 1e-13);
  }

  SUBCASE("serial and parallel paths agree bit for bit") {
    const WavePacket a = evolve(pk, 5.0, Exec::Serial);
    const WavePacket b = evolve(pk, 5.0, Exec::Parallel);
    CHECK(packet_dist(a, b) == 0.0);
    CHECK(expect_position(a, PositionRep::Dirac, Exec::Serial) ==
          expect_position(b, PositionRep::Dirac, Exec::Parallel));
  }
}

TEST_CASE("position expectation") {
  ZbwConfig cfg = quick_cfg();

  SUBCASE("symmetric real packet sits at the origin") {
    cfg.eta = 0.0;
    const WavePacket pk = init_packet(cfg);
    CHECK(std::abs(expect_position(pk, PositionRep::Dirac)) < 1e-10);
  }

  SUBCASE("FW expectation is linear in time for any mix") {
    const TimeSeries ts = run_zbw(cfg);
    std::vector<double> t, xf;
    for (const TimeSeriesRow& r : ts.rows) {
      t.push_back(r.t);
      xf.push_back(r.x_fw);
    }
    CHECK(linear_fit(t, xf).max_abs_residual < 1e-6);
  }
}

TEST_CASE("interference drives the oscillation") {
  ZbwConfig cfg = quick_cfg();
  const TimeSeries mixed = run_zbw(cfg);
  cfg.eta = 0.0;
  const TimeSeries pure = run_zbw(cfg);

  std::vector<double> t, xm, xp;
  for (std::size_t i = 0; i < mixed.rows.size(); ++i) {
    t.push_back(mixed.rows[i].t);
    xm.push_back(mixed.rows[i].x_dirac);
    xp.push_back(pure.rows[i].x_dirac);
  }
  const double amp_mixed = linear_fit(t, xm).max_abs_residual;
  const double amp_pure = linear_fit(t, xp).max_abs_residual;
  CHECK(amp_mixed > 1e-3);
  CHECK(amp_pure < 1e-8);
  CHECK(amp_mixed / std::max(amp_pure, 1e-300) > 1e3);

  // dominant frequency 2E(0) = 2m within one spectral bin
  const double bin = 2.0 * M_PI / (t.back() - t.front());
  CHECK(std::abs(dominant_frequency(t, xm) - 2.0) <= bin);
}

TEST_CASE("conserved columns and the speed bound") {
  const ZbwConfig cfg = quick_cfg();
  const TimeSeries ts = run_zbw(cfg);
  double nmin = 1e300, nmax = -1e300, emin = 1e300, emax = -1e300;
  for (const TimeSeriesRow& r : ts.rows) {
    nmin = std::min(nmin, r.norm);
    nmax = std::max(nmax, r.norm);
    emin = std::min(emin, r.energy);
    emax = std::max(emax, r.energy);
  }
  CHECK(nmax - nmin < 1e-10);
  CHECK(emax - emin < 1e-10);
  for (std::size_t i = 1; i < ts.rows.size(); ++i) {
    const double v = (ts.rows[i].x_dirac - ts.rows[i - 1].x_dirac) /
                     (ts.rows[i].t - ts.rows[i - 1].t);
    CHECK(std::abs(v) <= 1.0 + 1e-6);
  }
}

TEST_CASE("grid refinement convergence") {
  ZbwConfig cfg;
  const WavePacket coarse = init_packet(cfg);
  cfg.n *= 2;
  const WavePacket fine = init_packet(cfg);
  const double t = 50.0;
  const double xc = expect_position(evolve(coarse, t), PositionRep::Dirac);
  const double xf = expect_position(evolve(fine, t), PositionRep::Dirac);
  CHECK(std::abs(xc - xf) < 1e-6);
}

TEST_CASE("CSV serialization") {
  ZbwConfig cfg = quick_cfg();
  cfg.n_steps = 5;
  const TimeSeries ts = run_zbw(cfg);
  const std::string csv = timeseries_csv(ts);
  CHECK(csv.rfind("t,x_dirac,x_fw,norm,energy\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 rows
  CHECK(csv.find("nan") == std::string::npos);
}

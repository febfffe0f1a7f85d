#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diracspin/checks.hpp"

using namespace ds;

namespace {

std::vector<Momentum> default_samples(int count = 100) {
  SampleConfig cfg;
  cfg.count = count;
  return sample_momenta(cfg);
}

}  // namespace

TEST_CASE("Dirac Hamiltonian reference values") {
  const GammaSet& g = gammas();
  const MatFn h = hamiltonian(1.0);

  CHECK(frobenius_dist(h.value(Momentum(0, 0, 0, 1.0)), g.beta) == 0.0);

  const Momentum q(0.0, 0.0, 0.75, 1.0);
  const Mat4 hv = h.value(q);
  CHECK(is_hermitian(hv));
  Mat4 e2;
  for (int i = 0; i < 4; ++i) e2(i, i) = 1.5625;
  CHECK(frobenius_dist(hv * hv, e2) == 0.0);

  // (H-E)(H+E) = 0 and tr H = 0 force the spectrum {E, E, -E, -E}
  for (const Momentum& s : default_samples(20)) {
    const Mat4 m = h.value(s);
    const double e = s.energy();
    Mat4 lo = m, hi = m;
    for (int i = 0; i < 4; ++i) {
      lo(i, i) -= e;
      hi(i, i) += e;
    }
    CHECK(frobenius_norm(lo * hi) < 1e-13 * e * e);
    CHECK(std::abs(trace(m)) < 1e-15);
  }

  CHECK_THROWS_AS((void)hamiltonian(-1.0), ConfigError);
}

TEST_CASE("boost matrix entries and group structure") {
  const BoostMatrix id = boost_matrix(1.0, {0.0, 0.0, 0.0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(id.a[i][j] == (i == j ? 1.0 : 0.0));

  const BoostMatrix l = boost_matrix(1.0, {0.0, 0.0, 0.75});
  CHECK(l.a[0][0] == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(l.a[0][3] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(l.a[3][3] == doctest::Approx(1.25).epsilon(1e-15));

  // L(p) (m,0,0,0) = (p0, p)
  const std::array<double, 4> rest{1.0, 0.0, 0.0, 0.0};
  const std::array<double, 4> moving = l.apply(rest);
  CHECK(moving[0] == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(moving[3] == doctest::Approx(0.75).epsilon(1e-15));

  for (const Momentum& q : default_samples(30)) {
    const BoostMatrix lp = boost_matrix(q.m, q.p);
    const BoostMatrix lm = boost_matrix(q.m, {-q.p[0], -q.p[1], -q.p[2]});
    const BoostMatrix prod = boost_product(lp, lm);
    double defect = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        defect = std::max(defect, std::abs(prod.a[i][j] - (i == j ? 1.0 : 0.0)));
    CHECK(defect < 1e-12);
    CHECK(metric_defect(lp) < 1e-12);
    CHECK(lp.a[0][0] >= 1.0);
  }
}

TEST_CASE("boost to rest") {
  const Momentum q(0.3, -0.4, 0.9, 1.0);
  const std::array<double, 4> on_shell{q.energy(), q.p[0], q.p[1], q.p[2]};
  const std::array<double, 4> rest = boost_to_rest(q.m, q.p, on_shell);
  CHECK(std::abs(rest[0] - q.m) < 1e-14);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(rest[i]) < 1e-14);

  // transverse components are inert: p = z-axis, a in the x-y plane
  const std::array<double, 3> pz{0.0, 0.0, 0.75};
  const std::array<double, 4> w{0.0, 0.4, -1.3, 0.0};
  const std::array<double, 4> r = boost_to_rest(1.0, pz, w);
  CHECK(std::abs(r[1] - 0.4) < 1e-15);
  CHECK(std::abs(r[2] + 1.3) < 1e-15);
}

TEST_CASE("Pauli-Lubanski constructions agree") {
  const std::vector<Momentum> qs = default_samples();
  const FourVecOp def = pl_vector(PLMode::Definitional, 1.0);
  const FourVecOp closed = pl_vector(PLMode::DiracClosed, 1.0);
  const FourVecOp kin = pl_vector(PLMode::Kinematic, 1.0);

  for (int mu = 0; mu < 4; ++mu) {
    // the orbital part cancels in the epsilon contraction: every derivative
    // coefficient is the zero function even though it is stored structurally
    for (int k = 0; k < 3; ++k)
      CHECK(matfn_residual(def[mu].B[k], MatFn(), qs) < 1e-12);
    CHECK(!def[mu].has_C());
    CHECK(op_residual(def[mu], closed[mu], qs).max_residual < 1e-10);
  }

  // W^0 agrees between all three; the kinematic spatial part is the
  // rest-frame-substituted form, not the Dirac closed form
  CHECK(op_residual(def[0], kin[0], qs).max_residual < 1e-12);

  // at p = 0 the kinematic W is (0, m Sigma/2)
  const GammaSet& g = gammas();
  const Momentum q0(0.0, 0.0, 0.0, 1.0);
  CHECK(frobenius_norm(kin[0].A.value(q0)) < 1e-15);
  for (int i = 0; i < 3; ++i)
    CHECK(frobenius_dist(kin[i + 1].A.value(q0), 0.5 * g.sigma[i]) < 1e-15);
}

TEST_CASE("W squared is the spin Casimir") {
  const FourVecOp w = pl_vector(PLMode::DiracClosed, 1.0);
  // W_mu W^mu = (W^0)^2 - sum W^i W^i = -(3/4) m^2, metric (+,-,-,-)
  for (const Momentum& q : default_samples(40)) {
    const Mat4 w0 = w[0].A.value(q);
    Mat4 acc = w0 * w0;
    for (int i = 1; i < 4; ++i) {
      const Mat4 wi = w[i].A.value(q);
      acc = acc - wi * wi;
    }
    Mat4 want;
    for (int i = 0; i < 4; ++i) want(i, i) = -0.75;
    CHECK(frobenius_dist(acc, want) < 1e-10 * std::max(1.0, frobenius_norm(want)));
  }
}

TEST_CASE("Poincare algebra closes") {
  SampleConfig cfg;
  const CheckResult r = run_check("POINCARE_CLOSURE", cfg);
  CHECK(r.pass);
  CHECK(r.max_residual < 1e-10);
}

TEST_CASE("velocity operator spectrum is +-1") {
  const GammaSet& g = gammas();
  for (int i = 0; i < 3; ++i) {
    Mat4 lo = g.alpha[i], hi = g.alpha[i];
    for (int d = 0; d < 4; ++d) {
      lo(d, d) -= 1.0;
      hi(d, d) += 1.0;
    }
    CHECK(frobenius_norm(lo * hi) == 0.0);
    CHECK(std::abs(trace(g.alpha[i])) == 0.0);
  }
}

TEST_CASE("resolved sign conventions are definite") {
  CHECK(std::abs(resolved_k_sign()) == 1);
  CHECK(std::abs(resolved_pl_cross_sign()) == 1);
  CHECK(resolved_k_sign() == conventions().k_sign);
  CHECK(resolved_pl_cross_sign() == conventions().pl_cross_sign);
}

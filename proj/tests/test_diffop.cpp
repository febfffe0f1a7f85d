#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diracspin/sampling.hpp"
#include "diracspin/spincat.hpp"

using namespace ds;

namespace {

std::vector<Momentum> default_samples(int count = 50, std::uint64_t seed = 42) {
  SampleConfig cfg;
  cfg.count = count;
  cfg.seed = seed;
  return sample_momenta(cfg);
}

DiffOp zero_op() { return DiffOp{}; }

double residual_to_zero(const DiffOp& o, const std::vector<Momentum>& qs) {
  return op_residual(o, zero_op(), qs).max_residual;
}

}  // namespace

TEST_CASE("composition follows the product rule") {
  const GammaSet& g = gammas();
  const std::vector<Momentum> qs = default_samples();
  const DiffOp x1 = DiffOp::position_component(0);
  const DiffOp x2 = DiffOp::position_component(1);

  SUBCASE("position times a constant matrix") {
    const DiffOp o = op_compose(x1, DiffOp::mul(MatFn::constant(g.beta)));
    CHECK(o.order == 1);
    CHECK(matfn_residual(o.A, MatFn(), qs) == 0.0);
    CHECK(matfn_residual(o.B[0], Cx(0.0, 1.0) * MatFn::constant(g.beta), qs) == 0.0);
    CHECK(matfn_residual(o.B[1], MatFn(), qs) == 0.0);
  }

  SUBCASE("x^1 H_D picks up i alpha^1 and i H_D d_1") {
    const MatFn h = hamiltonian(1.0);
    const DiffOp o = op_compose(x1, DiffOp::mul(h));
    CHECK(matfn_residual(o.A, Cx(0.0, 1.0) * MatFn::constant(g.alpha[0]), qs) < 1e-15);
    CHECK(matfn_residual(o.B[0], Cx(0.0, 1.0) * h, qs) < 1e-15);
  }

  SUBCASE("x^1 x^2 is pure symmetrized second order") {
    const DiffOp o = op_compose(x1, x2);
    CHECK(o.order == 2);
    CHECK(matfn_residual(o.A, MatFn(), qs) == 0.0);
    for (int k = 0; k < 3; ++k) CHECK(matfn_residual(o.B[k], MatFn(), qs) == 0.0);
    // total action on d_1 d_2 is -1
    const MatFn tot = o.C[0][1] + o.C[1][0];
    CHECK(matfn_residual(tot, Cx(-1.0, 0.0) * MatFn::identity(), qs) == 0.0);
    CHECK(matfn_residual(o.C[0][1], o.C[1][0], qs) == 0.0);
  }

  SUBCASE("order overflow is rejected") {
    const DiffOp xx = op_compose(x1, x2);
    CHECK_THROWS_AS((void)op_compose(xx, x1), OrderOverflowError);
  }

  SUBCASE("associativity on order-compatible triples") {
    const DiffOp h = DiffOp::mul(hamiltonian(1.0));
    const DiffOp m = DiffOp::mul(MatFn::constant(g.gamma5));
    const DiffOp a = op_compose(op_compose(x1, h), m);
    const DiffOp b = op_compose(x1, op_compose(h, m));
    CHECK(op_residual(a, b, qs).max_residual < 1e-12);
  }
}

TEST_CASE("canonical commutators") {
  const GammaSet& g = gammas();
  const std::vector<Momentum> qs = default_samples();
  const VecOp x = usual_position();
  const VecOp p = momentum_operator();

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const DiffOp c = op_commutator(x[i], p[j]);
      const MatFn want =
          i == j ? Cx(0.0, 1.0) * MatFn::identity() : MatFn();
      CHECK(op_residual(c, DiffOp::mul(want), qs).max_residual < 1e-15);
    }

  const DiffOp h = DiffOp::mul(hamiltonian(1.0));
  for (int i = 0; i < 3; ++i) {
    const DiffOp c = op_commutator(x[i], h);
    CHECK(op_residual(c, DiffOp::mul(Cx(0.0, 1.0) * MatFn::constant(g.alpha[i])),
                      qs)
              .max_residual < 1e-15);
  }

  const DiffOp p0 = covariant_p0(1.0);
  for (int i = 0; i < 3; ++i) {
    const DiffOp c = op_commutator(x[i], p0);
    const MatFn want = (ScalarFn::coord(i) * recip(ScalarFn::energy())) *
                       (Cx(0.0, 1.0) * MatFn::identity());
    CHECK(op_residual(c, DiffOp::mul(want), qs).max_residual < 1e-14);
  }
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  const std::vector<Momentum> qs = default_samples();
  const VecOp j = total_angular_momentum();
  const VecOp s = spin_operator(SpinName::PryceC, 1.0);
  const DiffOp ab = op_commutator(j[0], s[1]);
  const DiffOp ba = op_commutator(s[1], j[0]);
  CHECK(op_residual(ab, op_scale(Cx(-1.0, 0.0), ba), qs).max_residual < 1e-14);

  const DiffOp sum = op_add(s[1], s[2]);
  const DiffOp lhs = op_commutator(j[0], sum);
  const DiffOp rhs = op_add(op_commutator(j[0], s[1]), op_commutator(j[0], s[2]));
  CHECK(op_residual(lhs, rhs, qs).max_residual < 1e-14);
}

TEST_CASE("Jacobi identity on catalog triples") {
  const std::vector<Momentum> qs = default_samples();
  const VecOp j = total_angular_momentum();
  const VecOp sfw = spin_operator(SpinName::FW, 1.0);
  const VecOp sc = spin_operator(SpinName::PryceC, 1.0);

  auto jacobi = [&](const DiffOp& a, const DiffOp& b, const DiffOp& c) {
    const DiffOp t1 = op_commutator(op_commutator(a, b), c);
    const DiffOp t2 = op_commutator(op_commutator(b, c), a);
    const DiffOp t3 = op_commutator(op_commutator(c, a), b);
    return residual_to_zero(op_add(op_add(t1, t2), t3), qs);
  };

  CHECK(jacobi(sfw[0], sfw[1], sfw[2]) < 1e-10);
  CHECK(jacobi(j[0], sc[1], sfw[2]) < 1e-10);
  CHECK(jacobi(j[2], sc[0], sc[1]) < 1e-10);
}

TEST_CASE("conjugation preserves commutators") {
  const std::vector<Momentum> qs = default_samples();
  const MatFn u = fw_unitary(1.0);
  const VecOp j = total_angular_momentum();
  const VecOp sc = spin_operator(SpinName::PryceC, 1.0);

  const DiffOp inner = op_conjugate(u, op_commutator(j[2], sc[0]));
  const DiffOp outer = op_commutator(op_conjugate(u, j[2]), op_conjugate(u, sc[0]));
  CHECK(op_residual(inner, outer, qs).max_residual < 1e-10);

  SUBCASE("identity conjugation is a no-op") {
    const DiffOp o = op_conjugate(MatFn::identity(), j[2]);
    CHECK(op_residual(o, j[2], qs).max_residual < 1e-14);
  }

  SUBCASE("non-unitary conjugator is rejected") {
    CHECK_THROWS_AS((void)op_conjugate(hamiltonian(1.0), j[2]), NonUnitaryError);
  }
}

TEST_CASE("parity conjugation") {
  const GammaSet& g = gammas();
  const std::vector<Momentum> qs = default_samples();
  const VecOp p = momentum_operator();
  const PLKinematicFns w = pl_kinematic_fns(1.0);

  for (int i = 0; i < 3; ++i) {
    const DiffOp pp = op_parity(p[i], g.beta);
    CHECK(op_residual(pp, op_scale(Cx(-1.0, 0.0), p[i]), qs).max_residual < 1e-15);

    const DiffOp sp = op_parity(
        DiffOp::mul(Cx(0.5, 0.0) * MatFn::constant(g.sigma[i])), g.beta);
    CHECK(op_residual(sp,
                      DiffOp::mul(Cx(0.5, 0.0) * MatFn::constant(g.sigma[i])),
                      qs)
              .max_residual < 1e-15);
  }

  const DiffOp w0p = op_parity(DiffOp::mul(w.w0), g.beta);
  CHECK(op_residual(w0p, op_scale(Cx(-1.0, 0.0), DiffOp::mul(w.w0)), qs)
            .max_residual < 1e-15);

  SUBCASE("parity is an involution") {
    const VecOp j = total_angular_momentum();
    const DiffOp twice = op_parity(op_parity(j[1], g.beta), g.beta);
    CHECK(op_residual(twice, j[1], qs).max_residual < 1e-12);
    const DiffOp h2 = op_parity(op_parity(DiffOp::mul(hamiltonian(1.0)), g.beta),
                                g.beta);
    CHECK(op_residual(h2, DiffOp::mul(hamiltonian(1.0)), qs).max_residual < 1e-12);
  }
}

TEST_CASE("operator residual reference cases") {
  const std::vector<Momentum> qs = default_samples(200);
  const VecOp j = total_angular_momentum();
  CHECK(op_residual(j[2], j[2], qs).max_residual == 0.0);

  const VecOp se = spin_operator(SpinName::PryceE, 1.0);
  const VecOp sfw = spin_operator(SpinName::FW, 1.0);
  CHECK(op_residual(se[2], sfw[2], qs).max_residual < 1e-10);

  // R_CM and q_(c) genuinely differ away from the rest frame
  const VecOp rcm = position_operator(PosName::CM, Variant::Closed, 1.0);
  const VecOp qc = position_operator(PosName::PryceC, Variant::Closed, 1.0);
  const std::vector<Momentum> at_m = {Momentum(1.0, 0.0, 0.0, 1.0),
                                      Momentum(0.0, 0.0, 1.0, 1.0)};
  CHECK(op_residual(rcm[0], qc[0], at_m).max_residual > 1e-3);
}

#include "diracspin/dirac.hpp"

namespace ds {

namespace {

Mat4 from_rows(std::initializer_list<Cx> entries) {
  Mat4 m;
  int i = 0;
  for (const Cx& e : entries) m.a[i++] = e;
  return m;
}

const Cx o{0.0, 0.0}, l{1.0, 0.0}, mi{0.0, -1.0}, pi_{0.0, 1.0};

GammaSet build_gammas() {
  GammaSet g;
  g.id = Mat4::identity();
  g.beta = from_rows({l, o, o, o,  o, l, o, o,  o, o, -l, o,  o, o, o, -l});
  g.gamma5 = from_rows({o, o, l, o,  o, o, o, l,  l, o, o, o,  o, l, o, o});
  // Sigma^i = diag(sigma_i, sigma_i)
  g.sigma[0] = from_rows({o, l, o, o,  l, o, o, o,  o, o, o, l,  o, o, l, o});
  g.sigma[1] = from_rows({o, mi, o, o,  pi_, o, o, o,  o, o, o, mi,  o, o, pi_, o});
  g.sigma[2] = from_rows({l, o, o, o,  o, -l, o, o,  o, o, l, o,  o, o, o, -l});
  for (int i = 0; i < 3; ++i) g.alpha[i] = g.gamma5 * g.sigma[i];
  return g;
}

int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
      (i == 2 && j == 0 && k == 1))
    return 1;
  return -1;
}

// epsilon^{mu nu rho sigma} with epsilon^{1230} = +1 (so epsilon^{0123} = -1)
int eps4(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return -sign;  // parity relative to (0,1,2,3), times epsilon^{0123} = -1
}

void require_mass(double m) {
  if (!(m > 0.0)) throw ConfigError("mass must be positive");
}

const std::vector<Momentum>& pl_probes() {
  static const std::vector<Momentum> probes = {
      Momentum(0.4, -0.3, 0.6, 1.0),
      Momentum(-0.8, 0.25, 0.1, 1.0),
      Momentum(0.0, 0.0, 1.0, 1.0),
  };
  return probes;
}

VecOp boost_generator_signed(double m, int sign) {
  const MatFn h = hamiltonian(m);
  const DiffOp h_op = DiffOp::mul(h);
  VecOp k;
  for (int i = 0; i < 3; ++i) {
    const DiffOp xi = DiffOp::position_component(i);
    k[i] = op_scale(Cx(0.5 * sign),
                    op_add(op_compose(xi, h_op), op_compose(h_op, xi)));
  }
  return k;
}

FourVecOp pl_definitional(double m, int k_sign) {
  const GammaSet& g = gammas();
  const VecOp j_rot = total_angular_momentum();
  const VecOp k_boost = boost_generator_signed(m, k_sign);

  // J_{nu rho} with indices lowered by g = diag(+,-,-,-)
  auto j_lower = [&](int nu, int rho) -> DiffOp {
    if (nu == rho) return DiffOp{};
    if (nu == 0) return op_scale(Cx(-1.0), k_boost[rho - 1]);  // J_{0i} = -K^i
    if (rho == 0) return k_boost[nu - 1];                      // J_{i0} = +K^i
    DiffOp r;  // J_{jk} = J^{jk} = eps_{jkl} J^l
    for (int li = 0; li < 3; ++li) {
      const int e = eps3(nu - 1, rho - 1, li);
      if (e != 0) r = op_add(r, op_scale(Cx(double(e)), j_rot[li]));
    }
    return r;
  };

  // P_sigma: P_0 = H_D, P_k = -p^k
  std::array<DiffOp, 4> p_lower;
  p_lower[0] = DiffOp::mul(hamiltonian(m));
  for (int k = 0; k < 3; ++k)
    p_lower[k + 1] =
        DiffOp::mul(Cx(-1.0) * (ScalarFn::coord(k) * MatFn::constant(g.id)));

  FourVecOp w;
  for (int mu = 0; mu < 4; ++mu) {
    DiffOp acc;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sg = 0; sg < 4; ++sg) {
          const int e = eps4(mu, nu, rho, sg);
          if (e == 0) continue;
          acc = op_add(acc, op_scale(Cx(0.5 * e),
                                     op_compose(j_lower(nu, rho), p_lower[sg])));
        }
    w[mu] = acc;
  }
  return w;
}

MatFn pl_dirac_closed_component(double m, int i, int cross_sign) {
  const GammaSet& g = gammas();
  const MatFn h = hamiltonian(m);
  MatFn wi = Cx(0.5) * (h * MatFn::constant(g.sigma[i]));
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int e = eps3(i, j, k);
      if (e == 0) continue;
      wi = wi + Cx(0.0, 0.5 * cross_sign * e) *
                    (ScalarFn::coord(k) * MatFn::constant(g.alpha[j]));
    }
  return wi;
}

MatFn sigma_dot_p_fn() {
  const GammaSet& g = gammas();
  MatFn f;
  for (int k = 0; k < 3; ++k)
    f = f + ScalarFn::coord(k) * MatFn::constant(g.sigma[k]);
  return f;
}

double op_b_coeff_norm(const DiffOp& o, const Momentum& q) {
  EvalCtx ctx(q);
  double n = 0.0;
  for (int k = 0; k < 3; ++k) n = std::max(n, frobenius_norm(o.B[k].value(ctx)));
  return n;
}

}  // namespace

const GammaSet& gammas() {
  static const GammaSet g = build_gammas();
  return g;
}

MatFn hamiltonian(double m) {
  require_mass(m);
  const GammaSet& g = gammas();
  MatFn h = Cx(m) * MatFn::constant(g.beta);
  for (int k = 0; k < 3; ++k)
    h = h + ScalarFn::coord(k) * MatFn::constant(g.alpha[k]);
  return h;
}

ScalarFn energy_scalar(double m) {
  require_mass(m);
  ScalarFn p2 = ScalarFn::constant(Cx(m * m));
  for (int k = 0; k < 3; ++k) p2 = p2 + ScalarFn::coord(k) * ScalarFn::coord(k);
  return sqrt_fn(p2);
}

MatFn energy_fn(double m) { return energy_scalar(m) * MatFn::identity(); }

VecOp usual_position() {
  return VecOp{DiffOp::position_component(0), DiffOp::position_component(1),
               DiffOp::position_component(2)};
}

VecOp momentum_operator() {
  VecOp p;
  for (int k = 0; k < 3; ++k)
    p[k] = DiffOp::mul(ScalarFn::coord(k) * MatFn::identity());
  return p;
}

DiffOp covariant_p0(double m) { return DiffOp::mul(energy_fn(m)); }

VecOp total_angular_momentum() {
  const GammaSet& g = gammas();
  VecOp j;
  for (int i = 0; i < 3; ++i) {
    DiffOp orbital;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int e = eps3(i, a, b);
        if (e == 0) continue;
        const DiffOp pb = DiffOp::mul(ScalarFn::coord(b) * MatFn::identity());
        orbital = op_add(orbital, op_scale(Cx(double(e)),
                                           op_compose(DiffOp::position_component(a), pb)));
      }
    j[i] = op_add(orbital, DiffOp::mul(Cx(0.5) * MatFn::constant(g.sigma[i])));
  }
  return j;
}

int resolved_k_sign() {
  static const int sign = [] {
    for (int s : {-1, +1}) {
      const FourVecOp w = pl_definitional(1.0, s);
      double worst = 0.0;
      for (const Momentum& q : pl_probes())
        for (int mu = 0; mu < 4; ++mu)
          worst = std::max(worst, op_b_coeff_norm(w[mu], q));
      if (worst < 1e-10) return s;
    }
    throw Error("no boost sign convention cancels the PL orbital part");
  }();
  return sign;
}

VecOp boost_generator(double m) {
  require_mass(m);
  return boost_generator_signed(m, resolved_k_sign());
}

int resolved_pl_cross_sign() {
  static const int sign = [] {
    const FourVecOp w_def = pl_definitional(1.0, resolved_k_sign());
    for (int s : {-1, +1}) {
      double worst = 0.0;
      for (const Momentum& q : pl_probes()) {
        EvalCtx ctx(q);
        for (int i = 0; i < 3; ++i) {
          const Mat4 closed = pl_dirac_closed_component(1.0, i, s).value(ctx);
          worst = std::max(worst, frobenius_dist(w_def[i + 1].A.value(ctx), closed));
        }
      }
      if (worst < 1e-10) return s;
    }
    throw Error("no cross-term sign matches the definitional PL vector");
  }();
  return sign;
}

PLKinematicFns pl_kinematic_fns(double m) {
  require_mass(m);
  const GammaSet& g = gammas();
  PLKinematicFns f;
  const MatFn sp = sigma_dot_p_fn();
  f.w0 = Cx(0.5) * sp;
  const ScalarFn denom =
      recip(ScalarFn::constant(Cx(2.0)) * (ScalarFn::constant(Cx(m)) + energy_scalar(m)));
  for (int i = 0; i < 3; ++i)
    f.w[i] = Cx(0.5 * m) * MatFn::constant(g.sigma[i]) +
             (denom * ScalarFn::coord(i)) * sp;
  return f;
}

FourVecOp pl_vector(PLMode mode, double m) {
  require_mass(m);
  switch (mode) {
    case PLMode::Definitional:
      return pl_definitional(m, resolved_k_sign());
    case PLMode::DiracClosed: {
      FourVecOp w;
      w[0] = DiffOp::mul(Cx(0.5) * sigma_dot_p_fn());
      for (int i = 0; i < 3; ++i)
        w[i + 1] = DiffOp::mul(pl_dirac_closed_component(m, i, resolved_pl_cross_sign()));
      return w;
    }
    case PLMode::Kinematic: {
      const PLKinematicFns f = pl_kinematic_fns(m);
      FourVecOp w;
      w[0] = DiffOp::mul(f.w0);
      for (int i = 0; i < 3; ++i) w[i + 1] = DiffOp::mul(f.w[i]);
      return w;
    }
  }
  throw ConfigError("unknown PL mode");
}

std::array<double, 4> BoostMatrix::apply(const std::array<double, 4>& w) const {
  std::array<double, 4> r{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) r[mu] += a[mu][nu] * w[nu];
  return r;
}

BoostMatrix boost_matrix(double m, const std::array<double, 3>& p) {
  require_mass(m);
  const double p0 = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m);
  BoostMatrix l;
  l.a[0][0] = p0 / m;
  for (int i = 0; i < 3; ++i) {
    l.a[0][i + 1] = p[i] / m;
    l.a[i + 1][0] = p[i] / m;
    for (int j = 0; j < 3; ++j)
      l.a[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + p[i] * p[j] / (m * (p0 + m));
  }
  return l;
}

BoostMatrix boost_product(const BoostMatrix& x, const BoostMatrix& y) {
  BoostMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += x.a[i][k] * y.a[k][j];
      r.a[i][j] = s;
    }
  return r;
}

double metric_defect(const BoostMatrix& l) {
  const double g[4] = {1.0, -1.0, -1.0, -1.0};
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double s = 0.0;
      for (int rho = 0; rho < 4; ++rho) s += l.a[rho][mu] * g[rho] * l.a[rho][nu];
      const double target = (mu == nu) ? g[mu] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  return worst;
}

std::array<double, 4> boost_to_rest(double m, const std::array<double, 3>& p,
                                    const std::array<double, 4>& w) {
  const std::array<double, 3> neg = {-p[0], -p[1], -p[2]};
  return boost_matrix(m, neg).apply(w);
}

}  // namespace ds

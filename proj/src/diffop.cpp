#include "diracspin/diffop.hpp"

namespace ds {

namespace {

const std::vector<Momentum>& probe_momenta() {
  static const std::vector<Momentum> probes = {
      Momentum(0.3, -0.2, 0.5, 1.0),
      Momentum(0.9, 0.1, -0.4, 1.0),
      Momentum(0.0, 0.0, 0.75, 1.0),
  };
  return probes;
}

int structural_order(const DiffOp& o) {
  if (o.has_C()) return 2;
  if (o.has_B()) return 1;
  return 0;
}

double coeff_norm(const MatFn& f, EvalCtx& ctx) {
  return frobenius_norm(f.value(ctx));
}

}  // namespace

DiffOp DiffOp::position_component(int i) {
  if (i < 0 || i > 2) throw ConfigError("position component index out of range");
  DiffOp o;
  o.B[i] = Cx(0.0, 1.0) * MatFn::identity();
  o.order = 1;
  return o;
}

DiffOp op_add(const DiffOp& a, const DiffOp& b) {
  DiffOp r;
  r.A = a.A + b.A;
  for (int k = 0; k < 3; ++k) r.B[k] = a.B[k] + b.B[k];
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) r.C[j][k] = a.C[j][k] + b.C[j][k];
  r.order = structural_order(r);
  return r;
}

DiffOp op_scale(Cx s, const DiffOp& a) {
  DiffOp r;
  r.A = s * a.A;
  for (int k = 0; k < 3; ++k) r.B[k] = s * a.B[k];
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) r.C[j][k] = s * a.C[j][k];
  r.order = structural_order(r);
  return r;
}

DiffOp op_scale(const ScalarFn& s, const DiffOp& a) {
  DiffOp r;
  r.A = s * a.A;
  for (int k = 0; k < 3; ++k) r.B[k] = s * a.B[k];
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) r.C[j][k] = s * a.C[j][k];
  r.order = structural_order(r);
  return r;
}

DiffOp op_sub(const DiffOp& a, const DiffOp& b) { return op_add(a, op_scale(Cx(-1.0), b)); }

DiffOp op_compose(const DiffOp& o1, const DiffOp& o2) {
  if (o1.order + o2.order > 2)
    throw OrderOverflowError("operator composition exceeds order 2");
  DiffOp r;

  // zeroth-order part of o1
  r.A = o1.A * o2.A;
  for (int l = 0; l < 3; ++l) r.B[l] = o1.A * o2.B[l];
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) r.C[j][k] = o1.A * o2.C[j][k];

  // first-order part of o1: B1^k d_k acting through the product rule
  for (int k = 0; k < 3; ++k) {
    if (o1.B[k].is_zero()) continue;
    r.A = r.A + o1.B[k] * partial(o2.A, k);
    r.B[k] = r.B[k] + o1.B[k] * o2.A;
    for (int l = 0; l < 3; ++l) {
      r.B[l] = r.B[l] + o1.B[k] * partial(o2.B[l], k);
      const MatFn half = Cx(0.5) * (o1.B[k] * o2.B[l]);
      r.C[k][l] = r.C[k][l] + half;
      r.C[l][k] = r.C[l][k] + half;
    }
  }

  // second-order part of o1 (o2 must be order 0 by the order check)
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      if (o1.C[j][k].is_zero()) continue;
      r.A = r.A + o1.C[j][k] * partial(partial(o2.A, j), k);
      r.B[k] = r.B[k] + o1.C[j][k] * partial(o2.A, j);
      r.B[j] = r.B[j] + o1.C[j][k] * partial(o2.A, k);
      r.C[j][k] = r.C[j][k] + o1.C[j][k] * o2.A;
    }

  r.order = structural_order(r);
  return r;
}

DiffOp op_commutator(const DiffOp& o1, const DiffOp& o2) {
  if (o1.order > 1 || o2.order > 1)
    throw OrderOverflowError("commutator requires operators of order <= 1");
  DiffOp d = op_sub(op_compose(o1, o2), op_compose(o2, o1));
  if (d.has_C()) {
    // the antisymmetric product cancels the second-order part identically;
    // confirm numerically, then drop the (zero) trees
    for (const Momentum& q : probe_momenta()) {
      EvalCtx ctx(q);
      double scale = 1.0;
      for (int k = 0; k < 3; ++k)
        scale = std::max({scale, coeff_norm(o1.B[k], ctx), coeff_norm(o2.B[k], ctx)});
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const double c = coeff_norm(d.C[j][k], ctx);
          if (c > 1e-9 * scale * scale)
            throw OrderOverflowError(
                "commutator second-order coefficient does not cancel");
        }
    }
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) d.C[j][k] = MatFn();
    d.order = structural_order(d);
  }
  return d;
}

DiffOp op_conjugate(const MatFn& u, const DiffOp& o, ConjDirection dir) {
  if (o.order > 1)
    throw OrderOverflowError("conjugation requires operators of order <= 1");
  if (u.is_zero()) throw NonUnitaryError("conjugation by the zero function");
  for (const Momentum& q : probe_momenta()) {
    const Mat4 uv = u.value(q);
    if (!is_unitary(uv, 1e-12))
      throw NonUnitaryError("conjugation matrix is not unitary at a probe momentum");
  }
  const MatFn uinv = inverse_fn(u);
  const MatFn& left = (dir == ConjDirection::InverseLeft) ? uinv : u;
  const MatFn& right = (dir == ConjDirection::InverseLeft) ? u : uinv;
  DiffOp r;
  r.A = left * (o.A * right);
  for (int k = 0; k < 3; ++k) {
    if (o.B[k].is_zero()) continue;
    r.A = r.A + left * (o.B[k] * partial(right, k));
    r.B[k] = left * (o.B[k] * right);
  }
  r.order = structural_order(r);
  return r;
}

DiffOp op_parity(const DiffOp& o, const Mat4& frame) {
  const MatFn f = MatFn::constant(frame);
  DiffOp r;
  if (!o.A.is_zero()) r.A = f * flip_momentum(o.A) * f;
  for (int k = 0; k < 3; ++k)
    if (!o.B[k].is_zero()) r.B[k] = Cx(-1.0) * (f * flip_momentum(o.B[k]) * f);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      if (!o.C[j][k].is_zero()) r.C[j][k] = f * flip_momentum(o.C[j][k]) * f;
  r.order = structural_order(r);
  return r;
}

namespace {

struct SampleResiduals {
  double a = 0.0;
  std::array<double, 3> b{};
  std::array<std::array<double, 3>, 3> c{};
  double max() const {
    double m = a;
    for (double x : b) m = std::max(m, x);
    for (const auto& row : c)
      for (double x : row) m = std::max(m, x);
    return m;
  }
};

double coeff_residual(const MatFn& f, const MatFn& g, EvalCtx& ctx) {
  const Mat4 fv = f.value(ctx);
  const Mat4 gv = g.value(ctx);
  return frobenius_dist(fv, gv) / std::max(1.0, frobenius_norm(fv));
}

}  // namespace

OpResidual op_residual(const DiffOp& o1, const DiffOp& o2,
                       const std::vector<Momentum>& samples, Exec exec) {
  if (samples.empty()) throw ConfigError("op_residual requires samples");
  const int n = static_cast<int>(samples.size());
  std::vector<SampleResiduals> per(n);
  auto body = [&](int i) {
    EvalCtx ctx(samples[i]);
    SampleResiduals& s = per[i];
    s.a = coeff_residual(o1.A, o2.A, ctx);
    for (int k = 0; k < 3; ++k) s.b[k] = coeff_residual(o1.B[k], o2.B[k], ctx);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s.c[j][k] = coeff_residual(o1.C[j][k], o2.C[j][k], ctx);
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
  OpResidual out;
  out.worst_sample = samples[0];
  for (int i = 0; i < n; ++i) {
    const SampleResiduals& s = per[i];
    out.residual_A = std::max(out.residual_A, s.a);
    for (int k = 0; k < 3; ++k) out.residual_B[k] = std::max(out.residual_B[k], s.b[k]);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.residual_C[j][k] = std::max(out.residual_C[j][k], s.c[j][k]);
    const double m = s.max();
    if (m > out.max_residual) {
      out.max_residual = m;
      out.worst_sample = samples[i];
    }
  }
  return out;
}

OpResidual vecop_residual(const VecOp& a, const VecOp& b,
                          const std::vector<Momentum>& samples, Exec exec) {
  OpResidual out;
  out.worst_sample = samples.empty() ? Momentum() : samples[0];
  for (int i = 0; i < 3; ++i) {
    OpResidual r = op_residual(a[i], b[i], samples, exec);
    if (r.max_residual > out.max_residual) {
      out.max_residual = r.max_residual;
      out.worst_sample = r.worst_sample;
    }
    out.residual_A = std::max(out.residual_A, r.residual_A);
    for (int k = 0; k < 3; ++k)
      out.residual_B[k] = std::max(out.residual_B[k], r.residual_B[k]);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.residual_C[j][k] = std::max(out.residual_C[j][k], r.residual_C[j][k]);
  }
  return out;
}

}  // namespace ds

#include "diracspin/matfn.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ds {

namespace {

template <class D>
struct MatNodeCRTP : MatNode {
  const D& self() const { return static_cast<const D&>(*this); }
  Mat4T<Ring<0>> eval_l0(EvalCtx& c) const override { return self().template ev<0>(c); }
  Mat4T<Ring<1>> eval_l1(EvalCtx& c) const override { return self().template ev<1>(c); }
  Mat4T<Ring<2>> eval_l2(EvalCtx& c) const override { return self().template ev<2>(c); }
  Mat4T<Ring<3>> eval_l3(EvalCtx& c) const override { return self().template ev<3>(c); }
};

template <class D>
struct ScalarNodeCRTP : ScalarNode {
  const D& self() const { return static_cast<const D&>(*this); }
  Ring<0> eval_l0(EvalCtx& c) const override { return self().template ev<0>(c); }
  Ring<1> eval_l1(EvalCtx& c) const override { return self().template ev<1>(c); }
  Ring<2> eval_l2(EvalCtx& c) const override { return self().template ev<2>(c); }
  Ring<3> eval_l3(EvalCtx& c) const override { return self().template ev<3>(c); }
};

// -- scalar nodes -----------------------------------------------------------

struct SConstNode : ScalarNodeCRTP<SConstNode> {
  Cx c;
  explicit SConstNode(Cx v) : c(v) {}
  template <int K>
  Ring<K> ev(EvalCtx&) const {
    return lift_cx<Ring<K>>(c);
  }
};

struct SCoordNode : ScalarNodeCRTP<SCoordNode> {
  int k;
  explicit SCoordNode(int kk) : k(kk) {}
  template <int K>
  Ring<K> ev(EvalCtx& c) const {
    return c.point<K>().p[k];
  }
};

struct SMassNode : ScalarNodeCRTP<SMassNode> {
  template <int K>
  Ring<K> ev(EvalCtx& c) const {
    return lift_scalar<Ring<K>>(c.point<K>().m);
  }
};

struct SAddNode : ScalarNodeCRTP<SAddNode> {
  ScalarFn a, b;
  SAddNode(ScalarFn x, ScalarFn y) : a(std::move(x)), b(std::move(y)) {}
  template <int K>
  Ring<K> ev(EvalCtx& c) const {
    return c.eval<K>(a.node()) + c.eval<K>(b.node());
  }
};

struct SMulNode : ScalarNodeCRTP<SMulNode> {
  ScalarFn a, b;
  SMulNode(ScalarFn x, ScalarFn y) : a(std::move(x)), b(std::move(y)) {}
  template <int K>
  Ring<K> ev(EvalCtx& c) const {
    return c.eval<K>(a.node()) * c.eval<K>(b.node());
  }
};

struct SInvNode : ScalarNodeCRTP<SInvNode> {
  ScalarFn a;
  explicit SInvNode(ScalarFn x) : a(std::move(x)) {}
  template <int K>
  Ring<K> ev(EvalCtx& c) const {
    return inv_r(c.eval<K>(a.node()));
  }
};

struct SSqrtNode : ScalarNodeCRTP<SSqrtNode> {
  ScalarFn a;
  explicit SSqrtNode(ScalarFn x) : a(std::move(x)) {}
  template <int K>
  Ring<K> ev(EvalCtx& c) const {
    return sqrt_r(c.eval<K>(a.node()));
  }
};

// -- matrix nodes -----------------------------------------------------------

struct MConstNode : MatNodeCRTP<MConstNode> {
  Mat4 m;
  explicit MConstNode(const Mat4& v) : m(v) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx&) const {
    Mat4T<Ring<K>> r;
    for (int i = 0; i < 16; ++i) r.a[i] = lift_cx<Ring<K>>(m.a[i]);
    return r;
  }
};

struct MAddNode : MatNodeCRTP<MAddNode> {
  MatFn a, b;
  MAddNode(MatFn x, MatFn y) : a(std::move(x)), b(std::move(y)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    return c.eval<K>(a.node()) + c.eval<K>(b.node());
  }
};

struct MMulNode : MatNodeCRTP<MMulNode> {
  MatFn a, b;
  MMulNode(MatFn x, MatFn y) : a(std::move(x)), b(std::move(y)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    return c.eval<K>(a.node()) * c.eval<K>(b.node());
  }
};

struct MScaleNode : MatNodeCRTP<MScaleNode> {
  ScalarFn s;
  MatFn a;
  MScaleNode(ScalarFn ss, MatFn x) : s(std::move(ss)), a(std::move(x)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    return c.eval<K>(s.node()) * c.eval<K>(a.node());
  }
};

struct MInvNode : MatNodeCRTP<MInvNode> {
  MatFn a;
  explicit MInvNode(MatFn x) : a(std::move(x)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    return inverse(c.eval<K>(a.node()));
  }
};

struct MAdjNode : MatNodeCRTP<MAdjNode> {
  MatFn a;
  explicit MAdjNode(MatFn x) : a(std::move(x)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    return adjoint(c.eval<K>(a.node()));
  }
};

struct MPartialNode : MatNodeCRTP<MPartialNode> {
  int k;
  MatFn a;
  MPartialNode(int kk, MatFn x) : k(kk), a(std::move(x)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    if constexpr (K >= kMaxJetLevel) {
      throw Error("jet nesting depth exceeded while differentiating");
    } else {
      const Mat4T<Ring<K + 1>>& full = c.eval<K + 1>(a.node());
      Mat4T<Ring<K>> r;
      for (int i = 0; i < 16; ++i) r.a[i] = full.a[i].d[k];
      return r;
    }
  }
};

struct MFlipNode : MatNodeCRTP<MFlipNode> {
  MatFn a;
  explicit MFlipNode(MatFn x) : a(std::move(x)) {}
  template <int K>
  Mat4T<Ring<K>> ev(EvalCtx& c) const {
    const Mat4T<Ring<K>>& raw = c.flipped().eval<K>(a.node());
    Mat4T<Ring<K>> r;
    for (int i = 0; i < 16; ++i) r.a[i] = flip_odd_orders(raw.a[i]);
    return r;
  }
};

}  // namespace

// -- ScalarFn builders ------------------------------------------------------

ScalarFn ScalarFn::constant(Cx c) { return ScalarFn(std::make_shared<SConstNode>(c)); }

ScalarFn ScalarFn::coord(int k) {
  if (k < 0 || k > 2) throw ConfigError("coordinate index out of range");
  return ScalarFn(std::make_shared<SCoordNode>(k));
}

ScalarFn ScalarFn::mass() { return ScalarFn(std::make_shared<SMassNode>()); }

ScalarFn ScalarFn::energy() {
  ScalarFn p2 = constant(Cx(0.0));
  for (int k = 0; k < 3; ++k) p2 = p2 + coord(k) * coord(k);
  return sqrt_fn(p2 + mass() * mass());
}

ScalarFn operator+(const ScalarFn& a, const ScalarFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return ScalarFn(std::make_shared<SAddNode>(a, b));
}

ScalarFn operator*(const ScalarFn& a, const ScalarFn& b) {
  if (a.is_zero() || b.is_zero()) return ScalarFn();
  return ScalarFn(std::make_shared<SMulNode>(a, b));
}

ScalarFn recip(const ScalarFn& a) {
  if (a.is_zero()) throw EvalDomainError("reciprocal of the zero function");
  return ScalarFn(std::make_shared<SInvNode>(a));
}

ScalarFn sqrt_fn(const ScalarFn& a) {
  if (a.is_zero()) throw EvalDomainError("sqrt of the zero function");
  return ScalarFn(std::make_shared<SSqrtNode>(a));
}

// -- MatFn builders ---------------------------------------------------------

MatFn MatFn::constant(const Mat4& m) { return MatFn(std::make_shared<MConstNode>(m)); }

MatFn operator+(const MatFn& a, const MatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return MatFn(std::make_shared<MAddNode>(a, b));
}

MatFn operator-(const MatFn& a) { return Cx(-1.0) * a; }

MatFn operator-(const MatFn& a, const MatFn& b) { return a + (-b); }

MatFn operator*(const MatFn& a, const MatFn& b) {
  if (a.is_zero() || b.is_zero()) return MatFn();
  return MatFn(std::make_shared<MMulNode>(a, b));
}

MatFn operator*(const ScalarFn& s, const MatFn& a) {
  if (s.is_zero() || a.is_zero()) return MatFn();
  return MatFn(std::make_shared<MScaleNode>(s, a));
}

MatFn operator*(Cx s, const MatFn& a) {
  if (s == Cx(0.0) || a.is_zero()) return MatFn();
  return ScalarFn::constant(s) * a;
}

MatFn partial(const MatFn& a, int k) {
  if (k < 0 || k > 2) throw ConfigError("partial index out of range");
  if (a.is_zero()) return MatFn();
  return MatFn(std::make_shared<MPartialNode>(k, a));
}

MatFn inverse_fn(const MatFn& a) {
  if (a.is_zero()) throw SingularMatrixError("inverse of the zero function");
  return MatFn(std::make_shared<MInvNode>(a));
}

MatFn adjoint_fn(const MatFn& a) {
  if (a.is_zero()) return MatFn();
  return MatFn(std::make_shared<MAdjNode>(a));
}

MatFn flip_momentum(const MatFn& a) {
  if (a.is_zero()) return MatFn();
  return MatFn(std::make_shared<MFlipNode>(a));
}

// -- evaluation -------------------------------------------------------------

void EvalCtx::init_points() {
  auto& p0 = std::get<0>(points_);
  for (int j = 0; j < 3; ++j) p0.p[j] = Cx(q_.p[j], 0.0);
  p0.m = q_.m;
  lift_into<1>();
  lift_into<2>();
  lift_into<3>();
}

Mat4 MatFn::value(EvalCtx& ctx) const {
  if (is_zero()) return Mat4::zero();
  return ctx.eval<0>(node_.get());
}

Mat4 MatFn::value(const Momentum& q) const {
  EvalCtx ctx(q);
  return value(ctx);
}

MatFnValue matfn_eval(const MatFn& f, const Momentum& q) {
  MatFnValue out;
  if (f.is_zero()) return out;
  EvalCtx ctx(q);
  const Mat4T<Ring<1>>& jm = ctx.eval<1>(f.node());
  for (int i = 0; i < 16; ++i) {
    out.value.a[i] = jm.a[i].v;
    for (int k = 0; k < 3; ++k) out.partials[k].a[i] = jm.a[i].d[k];
  }
  return out;
}

double matfn_residual(const MatFn& f, const MatFn& g,
                      const std::vector<Momentum>& samples, Exec exec) {
  if (samples.empty()) throw ConfigError("matfn_residual requires samples");
  const int n = static_cast<int>(samples.size());
  std::vector<double> res(n, 0.0);
  auto body = [&](int i) {
    EvalCtx ctx(samples[i]);
    const Mat4 fv = f.value(ctx);
    const Mat4 gv = g.value(ctx);
    res[i] = frobenius_dist(fv, gv) / std::max(1.0, frobenius_norm(fv));
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
  double mx = 0.0;
  for (double r : res) mx = std::max(mx, r);
  return mx;
}

}  // namespace ds

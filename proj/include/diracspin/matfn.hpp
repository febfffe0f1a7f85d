#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "diracspin/mat4.hpp"
#include "diracspin/momentum.hpp"

namespace ds {

/// Execution policy for sample sweeps.  Serial is the reference path;
/// Parallel uses OpenMP over samples / grid points and must produce
/// identical results (reductions run in a fixed order).
enum class Exec { Serial, Parallel };

// Jet nesting depth available to the evaluator.  Level 0 is plain complex;
// level k carries all mixed partials up to total order k.
constexpr int kMaxJetLevel = 3;

template <int K>
struct RingOf {
  using type = Jet<typename RingOf<K - 1>::type>;
};
template <>
struct RingOf<0> {
  using type = Cx;
};
template <int K>
using Ring = typename RingOf<K>::type;

template <int K>
struct Point {
  std::array<Ring<K>, 3> p;
  double m = 1.0;
};

/// Lift a complex constant into a (possibly nested) jet ring.
template <class R>
R lift_cx(const Cx& x) {
  if constexpr (std::is_same_v<R, Cx>) {
    return x;
  } else {
    R r;
    r.v = lift_cx<decltype(r.v)>(x);
    return r;
  }
}

class EvalCtx;

struct MatNode : std::enable_shared_from_this<MatNode> {
  virtual ~MatNode() = default;
  virtual Mat4T<Ring<0>> eval_l0(EvalCtx&) const = 0;
  virtual Mat4T<Ring<1>> eval_l1(EvalCtx&) const = 0;
  virtual Mat4T<Ring<2>> eval_l2(EvalCtx&) const = 0;
  virtual Mat4T<Ring<3>> eval_l3(EvalCtx&) const = 0;
};

struct ScalarNode : std::enable_shared_from_this<ScalarNode> {
  virtual ~ScalarNode() = default;
  virtual Ring<0> eval_l0(EvalCtx&) const = 0;
  virtual Ring<1> eval_l1(EvalCtx&) const = 0;
  virtual Ring<2> eval_l2(EvalCtx&) const = 0;
  virtual Ring<3> eval_l3(EvalCtx&) const = 0;
};

/// Scalar-valued function of momentum, built from {constants, p^k, m,
/// +, *, reciprocal, sqrt}.  Value type; empty handle means zero.
class ScalarFn {
 public:
  ScalarFn() = default;
  explicit ScalarFn(std::shared_ptr<const ScalarNode> n) : node_(std::move(n)) {}

  static ScalarFn constant(Cx c);
  static ScalarFn coord(int k);  // p^{k+1}, k in {0,1,2}
  static ScalarFn mass();
  static ScalarFn energy();  // sqrt(p.p + m^2)

  bool is_zero() const { return node_ == nullptr; }
  const ScalarNode* node() const { return node_.get(); }

 private:
  std::shared_ptr<const ScalarNode> node_;
};

ScalarFn operator+(const ScalarFn& a, const ScalarFn& b);
ScalarFn operator*(const ScalarFn& a, const ScalarFn& b);
ScalarFn recip(const ScalarFn& a);
ScalarFn sqrt_fn(const ScalarFn& a);

struct MatFnValue {
  Mat4 value;
  std::array<Mat4, 3> partials;
};

/// Differentiable 4x4-matrix-valued function of momentum.  Value type over
/// a shared immutable expression tree; empty handle means the zero function.
class MatFn {
 public:
  MatFn() = default;
  explicit MatFn(std::shared_ptr<const MatNode> n) : node_(std::move(n)) {}

  static MatFn constant(const Mat4& m);
  static MatFn identity() { return constant(Mat4::identity()); }

  bool is_zero() const { return node_ == nullptr; }
  const MatNode* node() const { return node_.get(); }

  /// Value at q (no derivatives).
  Mat4 value(const Momentum& q) const;
  Mat4 value(EvalCtx& ctx) const;

 private:
  std::shared_ptr<const MatNode> node_;
};

MatFn operator+(const MatFn& a, const MatFn& b);
MatFn operator-(const MatFn& a, const MatFn& b);
MatFn operator*(const MatFn& a, const MatFn& b);
MatFn operator*(const ScalarFn& s, const MatFn& a);
MatFn operator*(Cx s, const MatFn& a);
inline MatFn operator*(double s, const MatFn& a) { return Cx(s, 0.0) * a; }
MatFn operator-(const MatFn& a);

/// d/dp^{k+1} of a, as a new MatFn (differentiable again).
MatFn partial(const MatFn& a, int k);
MatFn inverse_fn(const MatFn& a);
MatFn adjoint_fn(const MatFn& a);
/// a composed with p -> -p (mass unchanged).
MatFn flip_momentum(const MatFn& a);

/// Memoizing evaluation context for one momentum point.  Every node is
/// evaluated at most once per jet level; subtrees shared across coefficient
/// functions are therefore shared at evaluation time too.  Not thread-safe;
/// use one context per thread.
class EvalCtx {
 public:
  explicit EvalCtx(const Momentum& q) : q_(q) { init_points(); }

  const Momentum& base() const { return q_; }

  template <int K>
  const Point<K>& point() const {
    return std::get<K>(points_);
  }

  template <int K>
  const Mat4T<Ring<K>>& eval(const MatNode* n) {
    auto& cache = std::get<K>(mat_caches_);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Mat4T<Ring<K>> r = dispatch_mat<K>(n);
    // caches are keyed by address, so pin the node for the context lifetime
    pinned_.push_back(n->shared_from_this());
    return cache.emplace(n, std::move(r)).first->second;
  }

  template <int K>
  const Ring<K>& eval(const ScalarNode* n) {
    auto& cache = std::get<K>(scalar_caches_);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Ring<K> r = dispatch_scalar<K>(n);
    pinned_.push_back(n->shared_from_this());
    return cache.emplace(n, std::move(r)).first->second;
  }

  /// Context at the negated momentum, shared by every momentum-reflection
  /// node under this root.
  EvalCtx& flipped() {
    if (!flipped_) flipped_ = std::make_unique<EvalCtx>(q_.negated());
    return *flipped_;
  }

 private:
  template <int K>
  Mat4T<Ring<K>> dispatch_mat(const MatNode* n) {
    if constexpr (K == 0) return n->eval_l0(*this);
    else if constexpr (K == 1) return n->eval_l1(*this);
    else if constexpr (K == 2) return n->eval_l2(*this);
    else return n->eval_l3(*this);
  }

  template <int K>
  Ring<K> dispatch_scalar(const ScalarNode* n) {
    if constexpr (K == 0) return n->eval_l0(*this);
    else if constexpr (K == 1) return n->eval_l1(*this);
    else if constexpr (K == 2) return n->eval_l2(*this);
    else return n->eval_l3(*this);
  }

  void init_points();

  template <int K>
  void lift_into() {
    const auto& lo = std::get<K - 1>(points_);
    auto& hi = std::get<K>(points_);
    hi.m = lo.m;
    for (int j = 0; j < 3; ++j) {
      Ring<K> pj;
      pj.v = lo.p[j];
      for (int i = 0; i < 3; ++i)
        pj.d[i] = (i == j) ? lift_scalar<Ring<K - 1>>(1.0) : Ring<K - 1>{};
      hi.p[j] = pj;
    }
  }

  Momentum q_;
  std::tuple<Point<0>, Point<1>, Point<2>, Point<3>> points_;
  std::tuple<std::unordered_map<const MatNode*, Mat4T<Ring<0>>>,
             std::unordered_map<const MatNode*, Mat4T<Ring<1>>>,
             std::unordered_map<const MatNode*, Mat4T<Ring<2>>>,
             std::unordered_map<const MatNode*, Mat4T<Ring<3>>>>
      mat_caches_;
  std::tuple<std::unordered_map<const ScalarNode*, Ring<0>>,
             std::unordered_map<const ScalarNode*, Ring<1>>,
             std::unordered_map<const ScalarNode*, Ring<2>>,
             std::unordered_map<const ScalarNode*, Ring<3>>>
      scalar_caches_;
  std::vector<std::shared_ptr<const void>> pinned_;
  std::unique_ptr<EvalCtx> flipped_;
};

/// Value and the three exact first partials at q.
MatFnValue matfn_eval(const MatFn& f, const Momentum& q);

/// max over samples of ||F(q)-G(q)||_F / max(1, ||F(q)||_F).
double matfn_residual(const MatFn& f, const MatFn& g,
                      const std::vector<Momentum>& samples,
                      Exec exec = Exec::Parallel);

}  // namespace ds

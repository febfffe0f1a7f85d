#pragma once

#include "diracspin/matfn.hpp"

namespace ds {

/// Momentum-space differential operator of order <= 2 with matrix-valued
/// coefficients:  psi -> A psi + sum_k B[k] d_k psi + sum_jk C[j][k] d_j d_k psi.
/// C is stored symmetrized.
struct DiffOp {
  MatFn A;
  std::array<MatFn, 3> B{};
  std::array<std::array<MatFn, 3>, 3> C{};
  int order = 0;

  /// Multiplication operator (order 0).
  static DiffOp mul(MatFn a) {
    DiffOp o;
    o.A = std::move(a);
    o.order = 0;
    return o;
  }

  /// x^{i} = i d/dp_i.
  static DiffOp position_component(int i);

  bool has_B() const { return !B[0].is_zero() || !B[1].is_zero() || !B[2].is_zero(); }
  bool has_C() const {
    for (const auto& row : C)
      for (const auto& c : row)
        if (!c.is_zero()) return true;
    return false;
  }
};

using VecOp = std::array<DiffOp, 3>;
using FourVecOp = std::array<DiffOp, 4>;

struct OpResidual {
  double max_residual = 0.0;
  Momentum worst_sample;
  double residual_A = 0.0;
  std::array<double, 3> residual_B{};
  std::array<std::array<double, 3>, 3> residual_C{};
};

DiffOp op_add(const DiffOp& a, const DiffOp& b);
DiffOp op_scale(Cx s, const DiffOp& a);
DiffOp op_scale(const ScalarFn& s, const DiffOp& a);
DiffOp op_sub(const DiffOp& a, const DiffOp& b);

/// Operator product with exact product-rule expansion.  Throws
/// OrderOverflowError if the result would exceed order 2.
DiffOp op_compose(const DiffOp& o1, const DiffOp& o2);

/// [o1, o2] for operators of order <= 1.  The second-order coefficient of
/// the raw difference is verified to vanish at probe momenta and dropped.
DiffOp op_commutator(const DiffOp& o1, const DiffOp& o2);

enum class ConjDirection {
  InverseLeft,   // U^{-1} O U
  InverseRight,  // U O U^{-1}
};

/// Unitary conjugation of an operator of order <= 1.  U is checked for
/// unitarity at probe momenta (1e-12).
DiffOp op_conjugate(const MatFn& u, const DiffOp& o,
                    ConjDirection dir = ConjDirection::InverseLeft);

/// frame * O(-p, -d) * frame^{-1}; `frame` is the intrinsic-parity matrix
/// (beta for Dirac spinors; frame^{-1} = frame is assumed).
DiffOp op_parity(const DiffOp& o, const Mat4& frame);

/// Coefficient-wise sampled residual between two operators.
OpResidual op_residual(const DiffOp& o1, const DiffOp& o2,
                       const std::vector<Momentum>& samples,
                       Exec exec = Exec::Parallel);

OpResidual vecop_residual(const VecOp& a, const VecOp& b,
                          const std::vector<Momentum>& samples,
                          Exec exec = Exec::Parallel);

}  // namespace ds

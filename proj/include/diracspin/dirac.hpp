#pragma once

#include "diracspin/diffop.hpp"

namespace ds {

/// Constant matrices of the standard Dirac representation.
struct GammaSet {
  Mat4 beta;      // gamma^0 = diag(I2, -I2)
  Mat4 gamma5;    // off-diagonal I2 blocks
  Mat4 sigma[3];  // Sigma^i = diag(sigma_i, sigma_i)
  Mat4 alpha[3];  // alpha^i = gamma5 Sigma^i
  Mat4 id;        // I4
};

const GammaSet& gammas();

/// Dirac Hamiltonian H_D(p) = alpha.p + beta m as a matrix function.
MatFn hamiltonian(double m);

/// E(p) = sqrt(p.p + m^2) with the mass baked in.
ScalarFn energy_scalar(double m);
/// E(p) * I4.
MatFn energy_fn(double m);

VecOp usual_position();               // x^i = i d/dp_i
VecOp momentum_operator();            // multiplication by p^i
DiffOp covariant_p0(double m);        // multiplication by E(p)
VecOp total_angular_momentum();       // J = x cross P + Sigma/2

/// Lorentz boost generator K^i = J^{0i} at t = 0.  The overall sign is a
/// convention; resolved_k_sign() fixes it by demanding that the epsilon
/// contraction building the Pauli-Lubanski vector cancel its orbital part.
VecOp boost_generator(double m);

/// Sign s in K = s * (x H + H x)/2 that makes the PL contraction order 0.
int resolved_k_sign();
/// Sign of the (i/2)(alpha cross P) term in the closed Dirac-representation
/// PL spatial part, resolved against the definitional contraction.
int resolved_pl_cross_sign();

enum class PLMode { Definitional, DiracClosed, Kinematic };

/// Pauli-Lubanski vector W^mu, three constructions.  Definitional performs
/// the full epsilon contraction over the generators (epsilon^{1230} = +1,
/// metric diag(+,-,-,-)); its derivative coefficients cancel numerically.
FourVecOp pl_vector(PLMode mode, double m);

/// Kinematic PL vector as plain matrix functions (W^0 = Sigma.P/2,
/// W^i = m Sigma^i/2 + (Sigma.P) p^i / (2(m+E))).
struct PLKinematicFns {
  MatFn w0;
  std::array<MatFn, 3> w;
};
PLKinematicFns pl_kinematic_fns(double m);

/// Real spacetime boost matrix, index convention Lambda^mu_nu.
struct BoostMatrix {
  std::array<std::array<double, 4>, 4> a{};
  std::array<double, 4> apply(const std::array<double, 4>& w) const;
};

BoostMatrix boost_matrix(double m, const std::array<double, 3>& p);
BoostMatrix boost_product(const BoostMatrix& x, const BoostMatrix& y);
/// max |(Lambda^T g Lambda - g)_{mu nu}|
double metric_defect(const BoostMatrix& l);

/// L(-p) w : transforms a four-vector to the particle rest frame.
std::array<double, 4> boost_to_rest(double m, const std::array<double, 3>& p,
                                    const std::array<double, 4>& w);

}  // namespace ds

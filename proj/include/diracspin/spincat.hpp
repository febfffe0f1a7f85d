#pragma once

#include <string>
#include <variant>
#include <vector>

#include "diracspin/dirac.hpp"

namespace ds {

enum class SpinName { BG, CM, NW, PryceC, PryceE, FW };
enum class PosName { CM, NW, PryceC, PryceE, FW };
enum class Variant { Definitional, Closed };

/// Sign/ordering conventions fixed at startup by cross-validation rather
/// than transcription.  k_sign and pl_cross_sign come from the PL
/// contraction; g5 signs are resolved by demanding the Pryce (e) operators
/// coincide with the Foldy-Wouthuysen mean operators.
struct Conventions {
  int k_sign;            // K = k_sign * (xH + Hx)/2
  int pl_cross_sign;     // closed PL spatial cross term
  int spin_e_g5_sign;    // sign of i*gamma0*gamma5 term in the (e) spin operator
  int pos_e_g5_sign;     // sign of i*gamma0*gamma5 term in the (e) position operator
};

const Conventions& conventions();

/// Foldy-Wouthuysen unitary (E + m + beta alpha.P) / sqrt(2E(m+E)).
MatFn fw_unitary(double m);
/// Pryce unitary (alpha.p + beta(E+m)) / sqrt(2E(E+m)); equals beta * U_FW.
MatFn pryce_unitary(double m);

/// All spin operators are order-0 (pure matrix functions of momentum).
VecOp spin_operator(SpinName name, double m);

VecOp position_operator(PosName name, Variant variant, double m);

/// Stable public operator identifiers (CLI surface).
struct NamedOperator {
  std::string name;
  std::variant<VecOp, DiffOp, MatFn> op;
};

const std::vector<std::string>& operator_names();
NamedOperator lookup_operator(const std::string& name, double m);

}  // namespace ds

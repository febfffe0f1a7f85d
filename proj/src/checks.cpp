#include "diracspin/checks.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace ds {

bool glob_match(const std::string& pattern, const std::string& text) {
  // iterative wildcard match with single-star backtracking
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

struct Stat {
  double v = 0.0;
  Momentum worst;
};

using Runner = std::function<Stat(const std::vector<Momentum>&, Exec,
                                  const SampleConfig&)>;

struct Entry {
  CheckSpec spec;
  Runner run;
};

Stat from_res(const OpResidual& r) { return {r.max_residual, r.worst_sample}; }

void merge_max(Stat& s, const Stat& o) {
  if (o.v > s.v) s = o;
}

ScalarFn sc(double x) { return ScalarFn::constant(Cx(x)); }

DiffOp zero_op() { return DiffOp{}; }

/// [S^i, S^j] = factor * i eps_ijk S^k over the three cyclic pairs
Stat su2_stat(const VecOp& s, const ScalarFn& factor,
              const std::vector<Momentum>& samples, Exec exec) {
  Stat out;
  out.worst = samples[0];
  const int pairs[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& idx : pairs) {
    const DiffOp comm = op_commutator(s[idx[0]], s[idx[1]]);
    DiffOp target = op_scale(Cx(0.0, 1.0), s[idx[2]]);
    if (!factor.is_zero()) target = op_scale(factor, target);
    merge_max(out, from_res(op_residual(comm, target, samples, exec)));
  }
  return out;
}

/// [J^i, V^j] = i eps_ijk V^k for all nine index pairs
Stat vector_under_rotation_stat(const VecOp& v, const std::vector<Momentum>& samples,
                                Exec exec) {
  Stat out;
  out.worst = samples[0];
  const VecOp j = total_angular_momentum();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const DiffOp comm = op_commutator(j[a], v[b]);
      DiffOp target;
      for (int c = 0; c < 3; ++c) {
        const int e = (a - b) == 0 ? 0 : ((b - a) * (c - a) * (c - b)) / 2;
        // eps_abc via the product formula; zero when any two coincide
        if (a == b || b == c || a == c || e == 0) continue;
        target = op_add(target, op_scale(Cx(0.0, double(e)), v[c]));
      }
      merge_max(out, from_res(op_residual(comm, target, samples, exec)));
    }
  return out;
}

/// max over coefficients of relative Frobenius residual at one momentum
double pair_residual_at(const VecOp& a, const VecOp& b, const Momentum& q) {
  EvalCtx ctx(q);
  double worst = 0.0;
  auto one = [&](const MatFn& f, const MatFn& g) {
    const Mat4 fv = f.value(ctx);
    const Mat4 gv = g.value(ctx);
    worst = std::max(worst, frobenius_dist(fv, gv) / std::max(1.0, frobenius_norm(fv)));
  };
  for (int i = 0; i < 3; ++i) {
    one(a[i].A, b[i].A);
    for (int k = 0; k < 3; ++k) one(a[i].B[k], b[i].B[k]);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) one(a[i].C[j][k], b[i].C[j][k]);
  }
  return worst;
}

/// min over samples with |p| >= 0.5 m of a per-sample residual
Stat distinctness_stat(const std::vector<Momentum>& samples,
                       const std::function<double(const Momentum&)>& res) {
  Stat out;
  out.v = std::numeric_limits<double>::infinity();
  out.worst = samples[0];
  bool any = false;
  for (const Momentum& q : samples) {
    if (q.radius() < 0.5 * q.m) continue;
    const double r = res(q);
    any = true;
    if (r < out.v) {
      out.v = r;
      out.worst = q;
    }
  }
  if (!any) throw ConfigError("no samples with |p| >= 0.5 m for distinctness check");
  return out;
}

Stat matfn_stat(const MatFn& f, const MatFn& g, const std::vector<Momentum>& samples,
                Exec exec) {
  // track the worst sample by re-scanning serially; matfn_residual only
  // returns the max
  Stat out;
  out.worst = samples[0];
  (void)exec;
  for (const Momentum& q : samples) {
    EvalCtx ctx(q);
    const Mat4 fv = f.value(ctx);
    const Mat4 gv = g.value(ctx);
    const double r = frobenius_dist(fv, gv) / std::max(1.0, frobenius_norm(fv));
    if (r > out.v) {
      out.v = r;
      out.worst = q;
    }
  }
  return out;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> r;
    const Cx im(0.0, 1.0);

    auto add = [&r](CheckSpec spec, Runner run) {
      r.push_back({std::move(spec), std::move(run)});
    };

    auto su2_check = [](SpinName name) {
      return [name](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
        return su2_stat(spin_operator(name, cfg.mass), ScalarFn(), s, e);
      };
    };

    add({"SU2_BG", "Bogolubov spin closes the su(2) algebra",
         "[S_BG^i, S_BG^j] = i eps_ijk S_BG^k", CheckKind::Commutator},
        su2_check(SpinName::BG));
    add({"SU2_NW", "Newton-Wigner-form spin closes the su(2) algebra",
         "[S_NW^i, S_NW^j] = i eps_ijk S_NW^k", CheckKind::Commutator},
        su2_check(SpinName::NW));
    add({"SU2_PRYCE_E", "Pryce (e) spin closes the su(2) algebra",
         "[S_e^i, S_e^j] = i eps_ijk S_e^k", CheckKind::Commutator},
        su2_check(SpinName::PryceE));
    add({"SU2_FW", "Foldy-Wouthuysen mean spin closes the su(2) algebra",
         "[S_FW^i, S_FW^j] = i eps_ijk S_FW^k", CheckKind::Commutator},
        su2_check(SpinName::FW));

    add({"VEC_UNDER_J", "every catalog spin transforms as a three-vector",
         "[J^i, S^j] = i eps_ijk S^k", CheckKind::Commutator},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          Stat out;
          out.worst = s[0];
          for (SpinName n : {SpinName::BG, SpinName::CM, SpinName::NW,
                             SpinName::PryceC, SpinName::PryceE, SpinName::FW})
            merge_max(out, vector_under_rotation_stat(spin_operator(n, cfg.mass), s, e));
          return out;
        });

    add({"AXIAL", "spins are axial vectors while momentum is polar",
         "beta S(-p) beta = +S(p), beta P(-p) beta = -P(p)", CheckKind::Parity},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          Stat out;
          out.worst = s[0];
          const Mat4 frame = gammas().beta;
          for (SpinName n :
               {SpinName::BG, SpinName::NW, SpinName::PryceE, SpinName::FW}) {
            const VecOp sp = spin_operator(n, cfg.mass);
            for (int i = 0; i < 3; ++i)
              merge_max(out, from_res(op_residual(op_parity(sp[i], frame), sp[i], s, e)));
          }
          const VecOp p = momentum_operator();
          for (int i = 0; i < 3; ++i)
            merge_max(out, from_res(op_residual(op_parity(p[i], frame),
                                                op_scale(Cx(-1.0), p[i]), s, e)));
          return out;
        });

    add({"BG_IS_PAULI", "Bogolubov spin reduces to the Pauli operator",
         "S_BG = Sigma/2", CheckKind::Equality, 1e-12},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          VecOp pauli;
          for (int i = 0; i < 3; ++i)
            pauli[i] = DiffOp::mul(Cx(0.5) * MatFn::constant(gammas().sigma[i]));
          return from_res(
              vecop_residual(spin_operator(SpinName::BG, cfg.mass), pauli, s, e));
        });

    add({"NW_EQ_BG", "NW-form spin has the same closed form as Bogolubov's",
         "S_NW = S_BG", CheckKind::Equality, 1e-12},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          return from_res(vecop_residual(spin_operator(SpinName::NW, cfg.mass),
                                         spin_operator(SpinName::BG, cfg.mass), s, e));
        });

    add({"PRYCEE_EQ_FW", "Pryce (e) spin equals the FW mean spin",
         "S_e = U_FW^-1 (Sigma/2) U_FW", CheckKind::Equality},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          return from_res(vecop_residual(spin_operator(SpinName::PryceE, cfg.mass),
                                         spin_operator(SpinName::FW, cfg.mass), s, e));
        });

    add({"QE_LOCAL", "Pryce (e) position components commute",
         "[q_e^i, q_e^j] = 0", CheckKind::Commutator},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const VecOp q = position_operator(PosName::PryceE, Variant::Closed, cfg.mass);
          Stat out;
          out.worst = s[0];
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
              merge_max(out, from_res(op_residual(op_commutator(q[i], q[j]),
                                                  zero_op(), s, e)));
          return out;
        });

    add({"QE_CANONICAL", "Pryce (e) position is canonically conjugate to momentum",
         "[q_e^i, P^j] = i delta_ij", CheckKind::Commutator},
        [im](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const VecOp q = position_operator(PosName::PryceE, Variant::Closed, cfg.mass);
          const VecOp p = momentum_operator();
          Stat out;
          out.worst = s[0];
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              const DiffOp target =
                  (i == j) ? DiffOp::mul(im * MatFn::identity()) : zero_op();
              merge_max(out, from_res(
                                 op_residual(op_commutator(q[i], p[j]), target, s, e)));
            }
          return out;
        });

    add({"QE_SPIN_COMMUTE", "Pryce (e) position commutes with its spin",
         "[q_e^i, S_e^j] = 0", CheckKind::Commutator},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const VecOp q = position_operator(PosName::PryceE, Variant::Closed, cfg.mass);
          const VecOp sp = spin_operator(SpinName::PryceE, cfg.mass);
          Stat out;
          out.worst = s[0];
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              merge_max(out, from_res(op_residual(op_commutator(q[i], sp[j]),
                                                  zero_op(), s, e)));
          return out;
        });

    add({"SFW_CONSERVED", "FW mean spin is a constant of the motion",
         "[S_FW^i, H_D] = 0", CheckKind::Commutator},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const VecOp sp = spin_operator(SpinName::FW, cfg.mass);
          const DiffOp h = DiffOp::mul(hamiltonian(cfg.mass));
          Stat out;
          out.worst = s[0];
          for (int i = 0; i < 3; ++i)
            merge_max(out,
                      from_res(op_residual(op_commutator(sp[i], h), zero_op(), s, e)));
          return out;
        });

    add({"SC_ALGEBRA", "Pryce (c) spin carries the m^2/E^2 structure factor on its "
                       "longitudinal component",
         "phat.([S_c^i, S_c^j]/(i eps_ijk)) = (m^2/E^2) phat.S_c", CheckKind::Commutator,
         1e-8},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig& cfg) {
          const VecOp sop = spin_operator(SpinName::PryceC, cfg.mass);
          Stat out;
          out.worst = s[0];
          const int pairs[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
          for (const Momentum& q : s) {
            const double r = q.radius();
            if (r < 1e-6 * q.m) continue;  // longitudinal direction undefined at p=0
            EvalCtx ctx(q);
            Mat4 scm[3];
            for (int i = 0; i < 3; ++i) scm[i] = sop[i].A.value(ctx);
            const double e2 = q.energy() * q.energy();
            const double factor = cfg.mass * cfg.mass / e2;
            // T^k := [S^i, S^j]/i for the cyclic pair (i,j,k); project the
            // free index onto phat and compare with the same projection of S_c
            Mat4 lon = Mat4::zero(), lon_s = Mat4::zero();
            for (const auto& idx : pairs) {
              const Mat4 t = Cx(0.0, -1.0) *
                             (scm[idx[0]] * scm[idx[1]] - scm[idx[1]] * scm[idx[0]]);
              lon = lon + (q.p[idx[2]] / r) * t;
              lon_s = lon_s + (q.p[idx[2]] / r) * scm[idx[2]];
            }
            const double denom = std::max(1e-12, frobenius_norm(lon_s));
            const double res = frobenius_dist(lon, Cx(factor) * lon_s) / denom;
            if (res > out.v) {
              out.v = res;
              out.worst = q;
            }
          }
          return out;
        });

    add({"SC_CLOSURE_MEASURED", "the full measured Pryce (c) commutation relation",
         "[S_c^i, S_c^j] = i eps_ijk (S_c^k - p^k W0/E^2)", CheckKind::Commutator},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const VecOp sop = spin_operator(SpinName::PryceC, cfg.mass);
          const PLKinematicFns pl = pl_kinematic_fns(cfg.mass);
          const ScalarFn en = energy_scalar(cfg.mass);
          const ScalarFn inv_e2 = recip(en * en);
          VecOp target;
          for (int k = 0; k < 3; ++k)
            target[k] = DiffOp::mul(
                sop[k].A +
                Cx(-1.0) * ((inv_e2 * ScalarFn::coord(k)) * pl.w0));
          Stat out;
          out.worst = s[0];
          const int pairs[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
          for (const auto& idx : pairs)
            merge_max(out, from_res(op_residual(
                               op_commutator(sop[idx[0]], sop[idx[1]]),
                               op_scale(Cx(0.0, 1.0), target[idx[2]]), s, e)));
          return out;
        });

    add({"X_HD_COMM", "velocity under the Dirac Hamiltonian is alpha",
         "[x^i, H_D] = i alpha^i", CheckKind::Commutator},
        [im](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const DiffOp h = DiffOp::mul(hamiltonian(cfg.mass));
          Stat out;
          out.worst = s[0];
          for (int i = 0; i < 3; ++i) {
            const DiffOp target =
                DiffOp::mul(im * MatFn::constant(gammas().alpha[i]));
            merge_max(out, from_res(op_residual(
                               op_commutator(DiffOp::position_component(i), h),
                               target, s, e)));
          }
          return out;
        });

    add({"X_P0_COMM", "velocity under the covariant energy is p/E",
         "[x^i, P0] = i p^i / E", CheckKind::Commutator},
        [im](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const DiffOp p0 = covariant_p0(cfg.mass);
          const ScalarFn inv_e = recip(energy_scalar(cfg.mass));
          Stat out;
          out.worst = s[0];
          for (int i = 0; i < 3; ++i) {
            const DiffOp target = DiffOp::mul(
                im * ((inv_e * ScalarFn::coord(i)) * MatFn::identity()));
            merge_max(out, from_res(op_residual(
                               op_commutator(DiffOp::position_component(i), p0),
                               target, s, e)));
          }
          return out;
        });

    add({"ALPHA_NEQ_P_OVER_E", "the two velocity operators are genuinely different",
         "alpha^i != p^i/E for |p| >= 0.5 m", CheckKind::Distinctness, 0.0, 1e-3},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig& cfg) {
          const ScalarFn inv_e = recip(energy_scalar(cfg.mass));
          std::array<MatFn, 3> lhs, rhs;
          for (int i = 0; i < 3; ++i) {
            lhs[i] = MatFn::constant(gammas().alpha[i]);
            rhs[i] = (inv_e * ScalarFn::coord(i)) * MatFn::identity();
          }
          return distinctness_stat(s, [&](const Momentum& q) {
            EvalCtx ctx(q);
            double worst = 0.0;
            for (int i = 0; i < 3; ++i) {
              const Mat4 a = lhs[i].value(ctx);
              worst = std::max(worst, frobenius_dist(a, rhs[i].value(ctx)) /
                                          std::max(1.0, frobenius_norm(a)));
            }
            return worst;
          });
        });

    add({"HD_NONCOVARIANT", "H_D is not the boost of the rest-frame Hamiltonian",
         "||(alpha.p + beta m) - E beta||_F > 0.5 for |p| >= 0.5 m",
         CheckKind::Distinctness, 0.0, 0.5},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig& cfg) {
          const MatFn h = hamiltonian(cfg.mass);
          const MatFn boosted =
              energy_scalar(cfg.mass) * MatFn::constant(gammas().beta);
          return distinctness_stat(s, [&](const Momentum& q) {
            EvalCtx ctx(q);
            return frobenius_dist(h.value(ctx), boosted.value(ctx));
          });
        });

    add({"CM_NEQ_PRYCEC", "energy-weighted center differs from Pryce (c)",
         "R_CM != q_c for |p| >= 0.5 m", CheckKind::Distinctness, 0.0, 1e-3},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig& cfg) {
          const VecOp cm = position_operator(PosName::CM, Variant::Closed, cfg.mass);
          const VecOp qc =
              position_operator(PosName::PryceC, Variant::Closed, cfg.mass);
          return distinctness_stat(
              s, [&](const Momentum& q) { return pair_residual_at(cm, qc, q); });
        });

    add({"HFW_DIAGONAL", "the FW transform diagonalizes the Hamiltonian",
         "U_FW H_D U_FW^-1 = beta E", CheckKind::Equality},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const MatFn u = fw_unitary(cfg.mass);
          const MatFn lhs = u * hamiltonian(cfg.mass) * inverse_fn(u);
          const MatFn rhs =
              energy_scalar(cfg.mass) * MatFn::constant(gammas().beta);
          return matfn_stat(lhs, rhs, s, e);
        });

    add({"FW_UNITARY", "the FW and Pryce transforms are unitary",
         "U_FW^dag U_FW = I, U_P^dag U_P = I", CheckKind::MatrixIdentity, 1e-12},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          Stat out;
          out.worst = s[0];
          const MatFn id = MatFn::identity();
          for (const MatFn& u : {fw_unitary(cfg.mass), pryce_unitary(cfg.mass)})
            merge_max(out, matfn_stat(adjoint_fn(u) * u, id, s, e));
          return out;
        });

    add({"UP_EQ_BETA_UFW", "the Pryce transform is beta times the FW transform",
         "U_P = beta U_FW", CheckKind::Equality, 1e-14},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          return matfn_stat(pryce_unitary(cfg.mass),
                            MatFn::constant(gammas().beta) * fw_unitary(cfg.mass), s,
                            e);
        });

    add({"QC_DEF_EQ_CLOSED", "Pryce (c) definition matches its closed form",
         "-(H^-1 K + K H^-1)/2 = x + (p x W + i g0 g5 (W - W0 p/(m+E)))/E^2",
         CheckKind::Equality},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          return from_res(vecop_residual(
              position_operator(PosName::PryceC, Variant::Definitional, cfg.mass),
              position_operator(PosName::PryceC, Variant::Closed, cfg.mass), s, e));
        });

    add({"QE_DEF_EQ_CLOSED", "Pryce (e) definition matches its closed form",
         "q_c + S_c x p / (m(m+E)) = x + (p x W/(m+E) + i g0 g5 (W - W0 p/E))/(m E)",
         CheckKind::Equality},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          return from_res(vecop_residual(
              position_operator(PosName::PryceE, Variant::Definitional, cfg.mass),
              position_operator(PosName::PryceE, Variant::Closed, cfg.mass), s, e));
        });

    add({"PL_DEF_EQ_CLOSED", "the epsilon contraction reproduces the closed PL vector",
         "eps^{mu nu rho sigma} J_{nu rho} P_sigma / 2 = (Sigma.p/2, H Sigma/2 - i(alpha x p)/2)",
         CheckKind::Equality},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const FourVecOp a = pl_vector(PLMode::Definitional, cfg.mass);
          const FourVecOp b = pl_vector(PLMode::DiracClosed, cfg.mass);
          Stat out;
          out.worst = s[0];
          for (int mu = 0; mu < 4; ++mu)
            merge_max(out, from_res(op_residual(a[mu], b[mu], s, e)));
          return out;
        });

    add({"BOOST_INVERSE", "the standard boost inverts by momentum reversal",
         "L(p) L(-p) = I", CheckKind::MatrixIdentity, 1e-12},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig&) {
          Stat out;
          out.worst = s[0];
          for (const Momentum& q : s) {
            const BoostMatrix prod = boost_product(
                boost_matrix(q.m, q.p),
                boost_matrix(q.m, {-q.p[0], -q.p[1], -q.p[2]}));
            double worst = 0.0;
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j)
                worst = std::max(worst,
                                 std::abs(prod.a[i][j] - (i == j ? 1.0 : 0.0)));
            if (worst > out.v) {
              out.v = worst;
              out.worst = q;
            }
          }
          return out;
        });

    add({"BOOST_METRIC", "the standard boost preserves the metric",
         "L^T g L = g", CheckKind::MatrixIdentity, 1e-12},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig&) {
          Stat out;
          out.worst = s[0];
          for (const Momentum& q : s) {
            const double d = metric_defect(boost_matrix(q.m, q.p));
            if (d > out.v) {
              out.v = d;
              out.worst = q;
            }
          }
          return out;
        });

    add({"EQ4_REPRODUCED", "rest-frame reduction matches the spatial closed form",
         "(L(-p) w)^i = w^i - w^0 p^i/(m + p^0)", CheckKind::MatrixIdentity, 1e-12},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig& cfg) {
          Stat out;
          out.worst = s[0];
          Rng rng(cfg.seed ^ 0x5bf03635ULL);
          const double m = cfg.mass;
          for (int n = 0; n < 100; ++n) {
            std::array<double, 3> p;
            std::array<double, 4> w;
            for (double& c : p) c = (2.0 * rng.next_double() - 1.0) * 3.0 * m;
            for (int i = 1; i < 4; ++i) w[i] = (2.0 * rng.next_double() - 1.0) * 2.0;
            const double p0 =
                std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m);
            // the spatial reduction formula presupposes a vector orthogonal
            // to the four-momentum (as the PL vector is): w.p = 0
            w[0] = (p[0] * w[1] + p[1] * w[2] + p[2] * w[3]) / p0;
            const auto rest = boost_to_rest(m, p, w);
            double worst = 0.0;
            for (int i = 0; i < 3; ++i)
              worst = std::max(worst, std::abs(rest[i + 1] -
                                               (w[i + 1] - w[0] * p[i] / (m + p0))));
            // on-shell momentum must land exactly on (m, 0)
            const auto rp = boost_to_rest(m, p, {p0, p[0], p[1], p[2]});
            worst = std::max(worst, std::abs(rp[0] - m));
            for (int i = 1; i < 4; ++i) worst = std::max(worst, std::abs(rp[i]));
            if (worst > out.v) {
              out.v = worst;
              out.worst = Momentum(p, m);
            }
          }
          return out;
        });

    add({"POINCARE_CLOSURE", "translation, rotation and boost generators close",
         "[J,J]=ieJ [J,K]=ieK [K,K]=-ieJ [J,P]=ieP [K,P]=s*i*delta*H [K,H]=s*i*P "
         "[P,P]=0 [P,H]=0 (s = resolved boost sign)",
         CheckKind::Commutator},
        [im](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const VecOp j = total_angular_momentum();
          const VecOp k = boost_generator(cfg.mass);
          const VecOp p = momentum_operator();
          const DiffOp h = DiffOp::mul(hamiltonian(cfg.mass));
          const double ks = conventions().k_sign;
          Stat out;
          out.worst = s[0];
          auto eps_target = [](const VecOp& v, int a, int b, Cx coef) {
            DiffOp t;
            for (int c = 0; c < 3; ++c) {
              if (a == b || a == c || b == c) continue;
              const int eps = ((b - a) * (c - a) * (c - b)) / 2;
              if (eps != 0) t = op_add(t, op_scale(coef * Cx(double(eps)), v[c]));
            }
            return t;
          };
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
              if (a != b) {
                merge_max(out, from_res(op_residual(op_commutator(j[a], j[b]),
                                                    eps_target(j, a, b, im), s, e)));
                merge_max(out, from_res(op_residual(op_commutator(k[a], k[b]),
                                                    eps_target(j, a, b, -im), s, e)));
              }
              merge_max(out, from_res(op_residual(op_commutator(j[a], k[b]),
                                                  eps_target(k, a, b, im), s, e)));
              merge_max(out, from_res(op_residual(op_commutator(j[a], p[b]),
                                                  eps_target(p, a, b, im), s, e)));
              const DiffOp kp_target =
                  (a == b) ? op_scale(Cx(ks) * im, h) : zero_op();
              merge_max(out, from_res(
                                 op_residual(op_commutator(k[a], p[b]), kp_target, s, e)));
              merge_max(out, from_res(op_residual(op_commutator(p[a], p[b]),
                                                  zero_op(), s, e)));
            }
          for (int a = 0; a < 3; ++a) {
            merge_max(out, from_res(op_residual(op_commutator(k[a], h),
                                                op_scale(Cx(ks) * im, p[a]), s, e)));
            merge_max(out,
                      from_res(op_residual(op_commutator(p[a], h), zero_op(), s, e)));
          }
          return out;
        });

    add({"W_SQUARED_CASIMIR", "the PL vector squares to the spin Casimir",
         "W_mu W^mu = -(3/4) m^2 I", CheckKind::MatrixIdentity},
        [](const std::vector<Momentum>& s, Exec e, const SampleConfig& cfg) {
          const FourVecOp w = pl_vector(PLMode::DiracClosed, cfg.mass);
          MatFn w2 = w[0].A * w[0].A;
          for (int i = 1; i < 4; ++i) w2 = w2 - w[i].A * w[i].A;
          const MatFn target =
              Cx(-0.75 * cfg.mass * cfg.mass) * MatFn::identity();
          return matfn_stat(w2, target, s, e);
        });

    add({"VELOCITY_SPECTRUM", "each velocity component has eigenvalues +-1",
         "(alpha^i - I)(alpha^i + I) = 0, tr alpha^i = 0", CheckKind::MatrixIdentity,
         1e-14},
        [](const std::vector<Momentum>& s, Exec, const SampleConfig&) {
          Stat out;
          out.worst = s[0];
          const Mat4 id = Mat4::identity();
          for (int i = 0; i < 3; ++i) {
            const Mat4& a = gammas().alpha[i];
            out.v = std::max(out.v, frobenius_norm((a - id) * (a + id)));
            out.v = std::max(out.v, std::abs(trace(a)));
          }
          return out;
        });

    return r;
  }();
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const Entry& e : registry())
    if (e.spec.id == id) return e;
  throw ConfigError("unknown check id: " + id);
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> s;
    for (const Entry& e : registry()) s.push_back(e.spec);
    return s;
  }();
  return specs;
}

CheckResult run_check(const std::string& id, const SampleConfig& cfg, double tol,
                      Exec exec) {
  if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
  const Entry& entry = find_entry(id);
  const std::vector<Momentum> samples = sample_momenta(cfg);
  if (samples.empty()) throw ConfigError("check requires at least one sample");
  const Stat stat = entry.run(samples, exec, cfg);
  CheckResult res;
  res.id = id;
  res.max_residual = stat.v;
  res.worst_sample = stat.worst;
  res.samples_used = static_cast<int>(samples.size());
  res.seed = cfg.seed;
  if (entry.spec.kind == CheckKind::Distinctness) {
    res.pass = stat.v >= entry.spec.floor;
  } else {
    const double eff = entry.spec.tolerance > 0.0 ? entry.spec.tolerance : tol;
    res.pass = stat.v <= eff;
  }
  return res;
}

SuiteReport run_suite(const SampleConfig& cfg, const std::string& filter, double tol,
                      Exec exec) {
  SuiteReport rep;
  rep.cfg = cfg;
  rep.tolerance = tol;
  rep.conventions = conventions();
  for (const Entry& e : registry()) {
    if (!filter.empty() && !glob_match(filter, e.spec.id)) continue;
    CheckRecord rec;
    rec.spec = e.spec;
    rec.result = run_check(e.spec.id, cfg, tol, exec);
    rep.checks.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace ds

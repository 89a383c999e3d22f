#pragma once

#include "tqe/tsallis.hpp"

namespace tqe {

struct CheckOptions {
    double tolerance_exact = 1e-9;
    double tolerance_opt = 1e-3;
    RoofOptions roof;  // optimizer-assisted paths only
    std::string state_descriptor;
    // Exploratory mode: evaluate outside the stated q-regime wherever the
    // formulas remain defined. Reports stay honest through bound directions;
    // the f_q domain 1 <= q <= 4 is never relaxed.
    bool allow_out_of_regime = false;
};

/// CKW monogamy: C(focus|rest)^2 >= sum_i C(rho_{focus,i})^2 on >= 3 qubits.
InequalityReport ckw_monogamy(const PureState& psi, int focus,
                              const CheckOptions& opts = {});

/// Dual polygamy: C^a(focus|rest)^2 <= sum_i C^a(rho_{focus,i})^2.
InequalityReport dual_polygamy(const PureState& psi, int focus,
                               const CheckOptions& opts = {});

/// Tsallis monogamy, 2 <= q <= 3: T_q(focus|rest) >= sum_i T_q(rho_{focus,i}).
InequalityReport tsallis_monogamy(const PureState& psi, int focus, const QParam& q,
                                  const CheckOptions& opts = {});

/// Tsallis polygamy on [1,2] u [3,4]: T^a_q(focus|rest) <= sum_i T^a_q(rho_{focus,i}).
/// RHS terms are exact at q = 2, 3 and certified lower bounds otherwise.
InequalityReport tsallis_polygamy(const PureState& psi, int focus, const QParam& q,
                                  const CheckOptions& opts = {});

/// Generalized monogamy at q = 2 or 3 with parties A = 0, B = 1, C_i the rest:
/// T_q(AB|C_1..C_n) >= sum_i [T_q(rho_{A,C_i}) - T^a_q(rho_{B,C_i})].
InequalityReport gen_monogamy_thm1(const PureState& psi, const QParam& q,
                                   const CheckOptions& opts = {});

/// TEoA reciprocity for q >= 1, pure path (all terms are marginal entropies):
/// T^a_q(A|BC) <= T^a_q(B|AC) + T^a_q(C|AB).
InequalityReport teoa_reciprocity_thm2(const PureState& psi,
                                       const std::vector<int>& group_a,
                                       const std::vector<int>& group_b,
                                       const QParam& q, const CheckOptions& opts = {});

/// Mixed-state path of the reciprocity relation: every term is estimated by
/// ensemble search. The search gives lower bounds only, so HOLDS needs the
/// LHS estimate to stabilize across an ensemble-size sweep; a certified
/// VIOLATED would need an exact RHS, which no closed form provides, so the
/// fallback verdict is INDETERMINATE.
InequalityReport teoa_reciprocity_thm2(const DensityMatrix& rho,
                                       const std::vector<int>& group_a,
                                       const std::vector<int>& group_b,
                                       const QParam& q, const CheckOptions& opts = {});

/// Multi-party TEoA bound for q >= 1:
/// T^a_q(focus|rest) <= sum_{i != focus} T^a_q(A_i|rest_i).
InequalityReport teoa_multiparty_cor1(const PureState& psi, int focus, const QParam& q,
                                      const CheckOptions& opts = {});

/// Generalized polygamy on [1,2] u [3,4], parties A = 0, B = 1, C_i the rest:
/// T^a_q(AB|C_1..C_n) <= 2 T^a_q(rho_AB) + sum_i [T^a_q(rho_{A,C_i}) + T^a_q(rho_{B,C_i})].
InequalityReport gen_polygamy_cor2(const PureState& psi, const QParam& q,
                                   const CheckOptions& opts = {});

}  // namespace tqe

#pragma once

#include "tqe/concurrence.hpp"
#include "tqe/entropy.hpp"
#include "tqe/states.hpp"

#include <cstdint>

namespace tqe {

/// The bridge between concurrence and Tsallis-q entanglement:
/// f_q(x) = (1/(q-1)) [1 - ((1+sqrt(1-x^2))/2)^q - ((1-sqrt(1-x^2))/2)^q]
/// on 0 <= x <= 1 and 1 <= q <= 4; binary Shannon entropy in the q->1 limit.
double f_q(double x, const QParam& q);

/// f_q(sqrt(x^2+y^2)) - f_q(x) - f_q(y) for x, y >= 0 with x^2 + y^2 <= 1.
double fq_additivity_gap(double x, double y, const QParam& q);

/// Sign regime of the gap: >= 0 on 2 <= q <= 3, <= 0 on [1,2] u [3,4],
/// identically 0 at q = 2 and q = 3.
enum class FqRegime { equality, superadditive, subadditive };
FqRegime fq_regime(const QParam& q);

struct GapExtrema {
    double min_gap = 0.0;
    double max_gap = 0.0;
    long points = 0;
};

/// Gap extrema over the grid x,y in {i/(n-1)} restricted to x^2 + y^2 <= 1.
GapExtrema fq_gap_scan(const QParam& q, int grid_points);

/// T_q of a pure state across a bipartition: S_q of the smaller-side marginal.
double tsallis_ent_pure(const PureState& psi, const std::vector<int>& first_group,
                        const QParam& q);

/// Closed form T_q(rho) = f_q(C(rho)) for two qubits, 1 <= q <= 4.
double tsallis_ent_2q(const DensityMatrix& rho, const QParam& q);

struct TeoaBound {
    double value = 0.0;
    bool exact = false;  // equality holds at q = 2 and q = 3
};

/// f_q(C^a(rho)): a lower bound on the Tsallis entanglement of assistance,
/// exact at q = 2 or 3.
TeoaBound teoa_2q_bound(const DensityMatrix& rho, const QParam& q);

/// q->1 limit of T_q for two qubits: the Wootters entanglement of formation
/// in nats.
double eof_limit(const DensityMatrix& rho);

enum class RoofMode { minimize, maximize };
enum class BoundDirection { upper_bound_on_min, lower_bound_on_max };

struct RoofOptions {
    int ensemble_size = 0;  // 0 -> rank + 2
    int max_ensemble = 24;
    int restarts = 32;
    int max_iters = 500;  // pair-rotation sweeps per restart
    double conv_tol = 1e-8;
    std::uint64_t seed = 0x7e11a5ULL;
};

struct RoofResult {
    double value = 0.0;
    RoofMode mode = RoofMode::minimize;
    int ensemble_size = 0;
    int iterations_used = 0;
    bool converged = false;
    BoundDirection bound_direction = BoundDirection::upper_bound_on_min;
};

/// Ensemble search over pure-state decompositions: size-k ensembles are
/// parameterized by k x r isometries applied to the eigen-ensemble, refined
/// by cyclic two-row rotations. Random search certifies only one side, so
/// minimize returns an upper bound on the roof minimum and maximize a lower
/// bound on the roof maximum.
RoofResult convex_roof(const DensityMatrix& rho, const std::vector<int>& first_group,
                       const QParam& q, RoofMode mode, const RoofOptions& opts = {});

}  // namespace tqe

#include "tqe/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace tqe {

QParam::QParam(double q) : q_(q) {
    if (!(q > 0.0)) throw Error("QOutOfRange", "entropic index must be positive");
}

double q_log(double x, const QParam& q) {
    if (!(x > 0.0)) throw Error("NonPositiveArgument", "q_log needs x > 0");
    if (q.is_limit()) return std::log(x);
    return (std::pow(x, 1.0 - q.q()) - 1.0) / (1.0 - q.q());
}

double tsallis_entropy_spectrum(const RealVec& eigenvalues, const QParam& q) {
    // spectrum noise below the floor is zeroed: x^q amplifies it badly for
    // q < 1 (1e-17 -> 3e-9 at q = 1/2)
    constexpr double noise_floor = 1e-13;
    if (q.is_limit()) {
        double s = 0.0;
        for (long i = 0; i < eigenvalues.size(); ++i) {
            const double lam = std::clamp(eigenvalues(i), 0.0, 1.0);
            if (lam > noise_floor) s -= lam * std::log(lam);
        }
        return s;
    }
    double trq = 0.0;
    for (long i = 0; i < eigenvalues.size(); ++i) {
        const double lam = std::clamp(eigenvalues(i), 0.0, 1.0);
        if (lam > noise_floor) trq += std::pow(lam, q.q());
    }
    return (1.0 - trq) / (q.q() - 1.0);
}

double tsallis_entropy(const DensityMatrix& rho, const QParam& q) {
    return tsallis_entropy_spectrum(hermitian_eigen(rho.cm()).values, q);
}

double von_neumann(const DensityMatrix& rho) {
    return tsallis_entropy(rho, QParam(1.0));
}

namespace {

void require_bipartite(const DensityMatrix& rho) {
    if (rho.dims().size() != 2)
        throw Error("BadPartition", "expected exactly two subsystems, got " +
                                        std::to_string(rho.dims().size()));
}

void require_q_ge_1(const QParam& q) {
    if (q.q() < 1.0) throw Error("QOutOfRange", "inequality is stated for q >= 1");
}

}  // namespace

InequalityReport check_subadditivity(const DensityMatrix& rho, const QParam& q,
                                     double tolerance) {
    require_bipartite(rho);
    require_q_ge_1(q);
    const double s_ab = tsallis_entropy(rho, q);
    const double s_a = tsallis_entropy(partial_trace(rho, {0}), q);
    const double s_b = tsallis_entropy(partial_trace(rho, {1}), q);
    return make_report("subadditivity", Sense::leq, q.q(), s_ab, Bound::exact,
                       s_a + s_b, Bound::exact, tolerance);
}

InequalityReport check_triangle(const DensityMatrix& rho, const QParam& q,
                                double tolerance) {
    require_bipartite(rho);
    require_q_ge_1(q);
    const double s_ab = tsallis_entropy(rho, q);
    const double s_a = tsallis_entropy(partial_trace(rho, {0}), q);
    const double s_b = tsallis_entropy(partial_trace(rho, {1}), q);
    return make_report("triangle", Sense::leq, q.q(), std::abs(s_a - s_b), Bound::exact,
                       s_ab, Bound::exact, tolerance);
}

}  // namespace tqe

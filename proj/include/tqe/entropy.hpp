#pragma once

#include "tqe/qmat.hpp"
#include "tqe/report.hpp"

#include <cmath>

namespace tqe {

/// Validated entropic index with its regime flags. Below limit_eps the q->1
/// branch (von Neumann / Shannon) is used.
class QParam {
public:
    static constexpr double limit_eps = 1e-6;

    explicit QParam(double q);

    double q() const { return q_; }
    bool is_limit() const { return std::abs(q_ - 1.0) < limit_eps; }
    bool in_fq_range() const { return q_ >= 1.0 && q_ <= 4.0; }
    bool in_monogamy_set() const { return q_ == 2.0 || q_ == 3.0; }
    bool in_polygamy_range() const {
        return (q_ >= 1.0 && q_ <= 2.0) || (q_ >= 3.0 && q_ <= 4.0);
    }

private:
    double q_;
};

/// ln_q x = (x^{1-q} - 1)/(1 - q); natural log in the q->1 limit.
double q_log(double x, const QParam& q);

/// S_q(rho) = (1 - tr rho^q)/(q - 1), from the clamped spectrum;
/// von Neumann entropy in the q->1 limit.
double tsallis_entropy(const DensityMatrix& rho, const QParam& q);

/// Spectrum-level variant; eigenvalues are clamped to [0,1] internally.
double tsallis_entropy_spectrum(const RealVec& eigenvalues, const QParam& q);

/// -tr rho ln rho in nats.
double von_neumann(const DensityMatrix& rho);

/// S_q(rho_AB) <= S_q(rho_A) + S_q(rho_B) for q >= 1 (two subsystems).
InequalityReport check_subadditivity(const DensityMatrix& rho, const QParam& q,
                                     double tolerance = 1e-9);

/// |S_q(rho_A) - S_q(rho_B)| <= S_q(rho_AB) for q >= 1 (two subsystems).
InequalityReport check_triangle(const DensityMatrix& rho, const QParam& q,
                                double tolerance = 1e-9);

}  // namespace tqe

#include "tqe/concurrence.hpp"

#include <algorithm>
#include <cmath>

namespace tqe {

namespace {

constexpr double kPsdTol = 1e-9;

void require_two_qubit(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw Error("NotTwoQubit", "operation needs subsystem dims (2,2)");
}

Mat sigma_yy() {
    Mat y = Mat::Zero(4, 4);
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

}  // namespace

double pure_concurrence(const PureState& psi, const std::vector<int>& first_group) {
    const int m = psi.n_subsystems();
    if (first_group.empty() || static_cast<int>(first_group.size()) >= m)
        throw Error("BadPartition", "bipartition needs two nonempty groups");
    DensityMatrix rho_a = reduced_density(psi, first_group);
    const double purity = rho_a.mat().squaredNorm();  // tr rho^2 for Hermitian rho
    return std::sqrt(2.0 * std::max(0.0, 1.0 - purity));
}

CMatrix spin_flip(const DensityMatrix& rho) {
    require_two_qubit(rho);
    const Mat y = sigma_yy();
    Mat flipped = y * rho.mat().conjugate() * y;
    return CMatrix(std::move(flipped), {2, 2});
}

WoottersSpectrum wootters_spectrum(const DensityMatrix& rho) {
    require_two_qubit(rho);

    // sqrt(rho) from the clamped spectrum, then the Hermitian product
    // sqrt(rho) rho~ sqrt(rho); its eigenvalues are the squared lambdas.
    EigenSystem sys = hermitian_eigen(rho.cm());
    Mat sqrt_rho = Mat::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        const double lam = std::max(0.0, sys.values(i));
        sqrt_rho += std::sqrt(lam) * (sys.vectors.col(i) * sys.vectors.col(i).adjoint());
    }

    Mat product = sqrt_rho * spin_flip(rho).mat() * sqrt_rho;
    EigenSystem prod_sys = hermitian_eigen(CMatrix(std::move(product), {2, 2}));

    WoottersSpectrum spec;
    for (int i = 0; i < 4; ++i) {
        double v = prod_sys.values(i);
        if (v < 0.0) {
            if (v < -kPsdTol)
                throw Error("NotPSD", "Wootters product eigenvalue " + std::to_string(v));
            v = 0.0;
        }
        spec.lambdas[i] = std::sqrt(v);
    }
    std::sort(spec.lambdas.begin(), spec.lambdas.end(), std::greater<double>());
    return spec;
}

double concurrence_2q(const DensityMatrix& rho) {
    const auto l = wootters_spectrum(rho).lambdas;
    const double c = l[0] - l[1] - l[2] - l[3];
    return std::clamp(c, 0.0, 1.0);
}

double coa_2q(const DensityMatrix& rho) {
    const auto l = wootters_spectrum(rho).lambdas;
    return l[0] + l[1] + l[2] + l[3];
}

InequalityReport check_identity_22d(const PureState& psi, double tolerance) {
    const auto& dims = psi.dims();
    if (dims.size() != 3 || dims[0] != 2 || dims[1] != 2)
        throw Error("BadDims", "identity needs a 2x2xd tripartite pure state");
    if (dims[2] != 2)
        throw Error("UnsupportedDimension",
                    "mixed 2xd concurrence has no closed form for d > 2");

    const double lhs = std::pow(pure_concurrence(psi, {0}), 2);
    const double ca_ab = coa_2q(reduced_density(psi, {0, 1}));
    const double c_ac = concurrence_2q(reduced_density(psi, {0, 2}));
    const double rhs = ca_ab * ca_ab + c_ac * c_ac;
    return make_report("identity-22d", Sense::eq, 0.0, lhs, Bound::exact, rhs,
                       Bound::exact, tolerance);
}

}  // namespace tqe

#pragma once

#include "tqe/qmat.hpp"
#include "tqe/report.hpp"
#include "tqe/states.hpp"

#include <array>

namespace tqe {

/// Square roots of the descending eigenvalues of sqrt(rho) rho~ sqrt(rho),
/// clamped nonnegative.
struct WoottersSpectrum {
    std::array<double, 4> lambdas{};
};

/// sqrt(2 (1 - tr rho_A^2)) for the reduction onto first_group.
double pure_concurrence(const PureState& psi, const std::vector<int>& first_group);

/// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y) on two qubits.
CMatrix spin_flip(const DensityMatrix& rho);

WoottersSpectrum wootters_spectrum(const DensityMatrix& rho);

/// max{0, lambda_1 - lambda_2 - lambda_3 - lambda_4}.
double concurrence_2q(const DensityMatrix& rho);

/// lambda_1 + lambda_2 + lambda_3 + lambda_4.
double coa_2q(const DensityMatrix& rho);

/// Pure 2x2xd identity C(A|BC)^2 = C^a(rho_AB)^2 + C(rho_AC)^2, exact for
/// d = 2; larger d has no closed form for the mixed 2xd concurrence and is
/// rejected with UnsupportedDimension.
InequalityReport check_identity_22d(const PureState& psi, double tolerance = 1e-9);

}  // namespace tqe

#include <doctest.h>

#include "tqe/concurrence.hpp"
#include "tqe/states.hpp"

#include <cmath>

using namespace tqe;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

DensityMatrix random_two_qubit(std::uint64_t stream, int rank = 4) {
    return with_dims(random_mixed(4, rank, Seed{606, stream}), {2, 2});
}

// sigma_y x sigma_y written out, for oracle-side conjugation
Mat yy_oracle() {
    Mat y = Mat::Zero(4, 4);
    y(0, 3) = y(3, 0) = -1.0;
    y(1, 2) = y(2, 1) = 1.0;
    return y;
}

}  // namespace

TEST_CASE("pure concurrence") {
    // product state
    const PureState prod = PureState([] {
        Vec a = Vec::Zero(4);
        a(0) = 1.0;
        return a;
    }(), {2, 2});
    CHECK(close(pure_concurrence(prod, {0}), 0.0, 1e-15));

    // Bell state: tr rho_A^2 = 1/2
    CHECK(close(pure_concurrence(ghz(2), {0}), 1.0, 1e-12));

    // W3 across A|BC: marginal spectrum (2/3, 1/3) gives 2 sqrt(2)/3
    CHECK(close(pure_concurrence(w_state(3), {0}), 2.0 * std::sqrt(2.0) / 3.0, 1e-12));

    CHECK_THROWS_WITH_AS(pure_concurrence(ghz(3), {}), doctest::Contains("BadPartition"),
                         Error);
    CHECK_THROWS_WITH_AS(pure_concurrence(ghz(3), {0, 1, 2}),
                         doctest::Contains("BadPartition"), Error);
}

TEST_CASE("spin flip") {
    // the Bell projector is its own spin flip
    const DensityMatrix bell = density(ghz(2));
    CHECK((spin_flip(bell).mat() - bell.mat()).cwiseAbs().maxCoeff() <= 1e-15);

    // |00><00| flips to |11><11|
    Mat p00 = Mat::Zero(4, 4);
    p00(0, 0) = 1.0;
    const DensityMatrix rho00 = validate_density(CMatrix(p00, {2, 2}));
    Mat p11 = Mat::Zero(4, 4);
    p11(3, 3) = 1.0;
    CHECK((spin_flip(rho00).mat() - p11).cwiseAbs().maxCoeff() <= 1e-15);

    // double application restores the original
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_two_qubit(static_cast<std::uint64_t>(trial));
        const CMatrix once = spin_flip(rho);
        const Mat twice = yy_oracle() * once.mat().conjugate() * yy_oracle();
        CHECK((twice - rho.mat()).cwiseAbs().maxCoeff() <= 1e-12);
    }

    CHECK_THROWS_WITH_AS(spin_flip(random_mixed(4, 4, Seed{1, 1})),
                         doctest::Contains("NotTwoQubit"), Error);
}

TEST_CASE("wootters spectrum oracles") {
    // Bell projector: rho rho~ = rho^2 has spectrum (1,0,0,0)
    const auto bell = wootters_spectrum(density(ghz(2))).lambdas;
    CHECK(close(bell[0], 1.0, 1e-12));
    CHECK(close(bell[1] + bell[2] + bell[3], 0.0, 1e-10));

    // maximally mixed: commuting case, lambda_i = 1/4
    const auto mixed =
        wootters_spectrum(validate_density(CMatrix(0.25 * Mat::Identity(4, 4), {2, 2})))
            .lambdas;
    for (double l : mixed) CHECK(close(l, 0.25, 1e-12));

    // GHZ reduction: diagonal (1/2, 0, 0, 1/2); the flip swaps the diagonal,
    // so rho rho~ = diag(1/4, 0, 0, 1/4)
    const auto ghz_red = wootters_spectrum(reduced_density(ghz(3), {0, 1})).lambdas;
    CHECK(close(ghz_red[0], 0.5, 1e-12));
    CHECK(close(ghz_red[1], 0.5, 1e-12));
    CHECK(close(ghz_red[2], 0.0, 1e-10));
    CHECK(close(ghz_red[3], 0.0, 1e-10));
}

TEST_CASE("two-qubit concurrence and CoA golden values") {
    CHECK(close(concurrence_2q(density(ghz(2))), 1.0, 1e-12));
    CHECK(close(coa_2q(density(ghz(2))), 1.0, 1e-10));

    const DensityMatrix ghz_red = reduced_density(ghz(3), {0, 1});
    CHECK(close(concurrence_2q(ghz_red), 0.0, 1e-12));
    CHECK(close(coa_2q(ghz_red), 1.0, 1e-12));

    const DensityMatrix w_red = reduced_density(w_state(3), {0, 1});
    CHECK(close(concurrence_2q(w_red), 2.0 / 3.0, 1e-12));
    CHECK(close(coa_2q(w_red), 2.0 / 3.0, 1e-12));

    // max clause active below the Werner threshold
    CHECK(close(concurrence_2q(werner(0.2)), 0.0, 1e-12));

    // product pure state: all lambdas vanish except one pair cancelling
    Mat p00 = Mat::Zero(4, 4);
    p00(0, 0) = 1.0;
    CHECK(close(coa_2q(validate_density(CMatrix(p00, {2, 2}))), 0.0, 1e-10));
}

TEST_CASE("werner concurrence matches max(0,(3p-1)/2) on a 101-point grid") {
    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        CHECK(close(concurrence_2q(werner(p)), expected, 1e-10));
    }
}

TEST_CASE("mixed formula agrees with the pure formula on pure inputs") {
    for (int trial = 0; trial < 50; ++trial) {
        const PureState psi = haar_random_pure({2, 2}, Seed{71, static_cast<std::uint64_t>(trial)});
        CHECK(close(concurrence_2q(density(psi)), pure_concurrence(psi, {0}), 1e-10));
    }
}

TEST_CASE("coa dominates concurrence and both are locally invariant") {
    Rng rng(Seed{72, 0});
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_two_qubit(static_cast<std::uint64_t>(trial),
                                                   1 + trial % 4);
        const double c = concurrence_2q(rho);
        const double ca = coa_2q(rho);
        CHECK(ca >= c - 1e-12);
        CHECK(ca <= 1.0 + 1e-9);

        const Mat u = haar_random_unitary(2, rng);
        const Mat v = haar_random_unitary(2, rng);
        Mat uv = Mat::Zero(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) uv.block(2 * i, 2 * j, 2, 2) = u(i, j) * v;
        const DensityMatrix rotated =
            DensityMatrix::unchecked(CMatrix(uv * rho.mat() * uv.adjoint(), {2, 2}));
        CHECK(close(concurrence_2q(rotated), c, 1e-9));
        CHECK(close(coa_2q(rotated), ca, 1e-9));
    }
}

TEST_CASE("2x2xd identity") {
    // GHZ3: 1 = 1 + 0
    const InequalityReport g = check_identity_22d(ghz(3));
    CHECK(close(g.lhs, 1.0, 1e-12));
    CHECK(close(g.rhs, 1.0, 1e-10));
    CHECK(g.verdict == Verdict::holds);

    // W3: 8/9 on both sides via the closed forms
    const InequalityReport w = check_identity_22d(w_state(3));
    CHECK(close(w.lhs, 8.0 / 9.0, 1e-12));
    CHECK(close(w.rhs, 8.0 / 9.0, 1e-10));
    CHECK(std::abs(w.lhs - w.rhs) <= 1e-10);

    // product state: 0 = 0
    Vec a = Vec::Zero(8);
    a(0) = 1.0;
    const InequalityReport p = check_identity_22d(PureState(a, {2, 2, 2}));
    CHECK(close(p.lhs, 0.0, 1e-12));
    CHECK(close(p.rhs, 0.0, 1e-10));

    CHECK_THROWS_WITH_AS(check_identity_22d(ghz(4)), doctest::Contains("BadDims"), Error);
    CHECK_THROWS_WITH_AS(check_identity_22d(haar_random_pure({2, 2, 3}, Seed{6, 6})),
                         doctest::Contains("UnsupportedDimension"), Error);
    CHECK_THROWS_WITH_AS(check_identity_22d(haar_random_pure({3, 2, 2}, Seed{6, 7})),
                         doctest::Contains("BadDims"), Error);
}

TEST_CASE("identity holds on random 3-qubit states") {
    for (int trial = 0; trial < 500; ++trial) {
        const PureState psi =
            haar_random_pure({2, 2, 2}, Seed{73, static_cast<std::uint64_t>(trial)});
        const InequalityReport r = check_identity_22d(psi, 1e-10);
        CHECK(std::abs(r.lhs - r.rhs) <= 1e-10);
    }
}

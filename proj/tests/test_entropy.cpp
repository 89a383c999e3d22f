#include <doctest.h>

#include "tqe/entropy.hpp"
#include "tqe/states.hpp"

#include <cmath>

using namespace tqe;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

DensityMatrix maximally_mixed(int d, std::vector<int> dims) {
    return validate_density(CMatrix(Mat::Identity(d, d) / d, std::move(dims)));
}

DensityMatrix random_two_qubit(std::uint64_t stream, int rank = 4) {
    return with_dims(random_mixed(4, rank, Seed{2024, stream}), {2, 2});
}

}  // namespace

TEST_CASE("QParam regimes") {
    CHECK_THROWS_WITH_AS(QParam(0.0), doctest::Contains("QOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(QParam(-2.0), doctest::Contains("QOutOfRange"), Error);

    CHECK(QParam(1.0).is_limit());
    CHECK(QParam(1.0 + 1e-7).is_limit());
    CHECK_FALSE(QParam(1.0 + 1e-4).is_limit());

    CHECK(QParam(2.0).in_monogamy_set());
    CHECK(QParam(3.0).in_monogamy_set());
    CHECK_FALSE(QParam(2.5).in_monogamy_set());

    CHECK(QParam(1.5).in_polygamy_range());
    CHECK(QParam(3.5).in_polygamy_range());
    CHECK_FALSE(QParam(2.5).in_polygamy_range());

    CHECK(QParam(4.0).in_fq_range());
    CHECK_FALSE(QParam(4.5).in_fq_range());
    CHECK_FALSE(QParam(0.5).in_fq_range());
}

TEST_CASE("q_log values and limit") {
    for (double q : {0.5, 1.0, 2.0, 3.7}) CHECK(q_log(1.0, QParam(q)) == 0.0);
    CHECK(close(q_log(2.0, QParam(2.0)), 0.5, 1e-15));

    // limit branch against the natural-log oracle
    const double e = std::exp(1.0);
    CHECK(close(q_log(e, QParam(1.0 + 1e-7)), 1.0, 1e-6));
    CHECK(close(q_log(e, QParam(1.0 - 1e-7)), 1.0, 1e-6));

    CHECK_THROWS_WITH_AS(q_log(0.0, QParam(2.0)), doctest::Contains("NonPositiveArgument"),
                         Error);
    CHECK_THROWS_WITH_AS(q_log(-1.0, QParam(2.0)), doctest::Contains("NonPositiveArgument"),
                         Error);
}

TEST_CASE("tsallis entropy golden values") {
    const DensityMatrix pure = density(haar_random_pure({4}, Seed{1, 1}));
    for (double q : {0.5, 1.0, 2.0, 3.0}) CHECK(close(tsallis_entropy(pure, QParam(q)), 0.0, 1e-12));

    CHECK(close(tsallis_entropy(maximally_mixed(2, {2}), QParam(2.0)), 0.5, 1e-14));
    CHECK(close(tsallis_entropy(maximally_mixed(4, {4}), QParam(3.0)), 15.0 / 32.0, 1e-14));
}

TEST_CASE("von Neumann entropy") {
    CHECK(close(von_neumann(maximally_mixed(2, {2})), std::log(2.0), 1e-14));
    CHECK(close(von_neumann(density(haar_random_pure({4}, Seed{2, 2}))), 0.0, 1e-12));

    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 0.9;
    d(1, 1) = 0.1;
    const double expected = -0.9 * std::log(0.9) - 0.1 * std::log(0.1);
    CHECK(close(von_neumann(validate_density(CMatrix(d, {2}))), expected, 1e-14));
}

TEST_CASE("continuity at q = 1") {
    for (int dim : {2, 4, 8}) {
        for (int trial = 0; trial < 10; ++trial) {
            const DensityMatrix rho =
                random_mixed(dim, dim, Seed{333, static_cast<std::uint64_t>(dim * 100 + trial)});
            const double vn = von_neumann(rho);
            CHECK(close(tsallis_entropy(rho, QParam(1.0 + 1e-4)), vn, 1e-3));
            CHECK(close(tsallis_entropy(rho, QParam(1.0 - 1e-4)), vn, 1e-3));
        }
    }
}

TEST_CASE("concavity spot check") {
    for (double q : {0.5, 2.0, 3.0}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto s = static_cast<std::uint64_t>(trial);
            const DensityMatrix a = random_mixed(4, 4, Seed{91, 2 * s});
            const DensityMatrix b = random_mixed(4, 3, Seed{91, 2 * s + 1});
            const double lam = (trial + 1) / 31.0;
            const DensityMatrix mix = validate_density(
                CMatrix(lam * a.mat() + (1.0 - lam) * b.mat(), {4}));
            const double lhs = tsallis_entropy(mix, QParam(q));
            const double rhs = lam * tsallis_entropy(a, QParam(q)) +
                               (1.0 - lam) * tsallis_entropy(b, QParam(q));
            CHECK(lhs >= rhs - 1e-9);
        }
    }
}

TEST_CASE("entropy is unitarily invariant") {
    Rng rng(Seed{13, 0});
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_mixed(6, 4, Seed{14, static_cast<std::uint64_t>(trial)});
        const Mat u = haar_random_unitary(6, rng);
        const DensityMatrix rotated =
            validate_density(CMatrix(u * rho.mat() * u.adjoint(), {6}));
        for (double q : {0.7, 1.0, 2.0, 3.3})
            CHECK(close(tsallis_entropy(rho, QParam(q)), tsallis_entropy(rotated, QParam(q)),
                        1e-10));
    }
}

TEST_CASE("subadditivity golden cases") {
    // product of maximally mixed qubits at q = 2
    const DensityMatrix prod = maximally_mixed(4, {2, 2});
    const InequalityReport r = check_subadditivity(prod, QParam(2.0));
    CHECK(close(r.lhs, 0.75, 1e-14));
    CHECK(close(r.rhs, 1.0, 1e-14));
    CHECK(close(r.slack, 0.25, 1e-14));
    CHECK(r.verdict == Verdict::holds);

    const InequalityReport bell = check_subadditivity(density(ghz(2)), QParam(2.0));
    CHECK(close(bell.lhs, 0.0, 1e-12));
    CHECK(close(bell.rhs, 1.0, 1e-12));
    CHECK(close(bell.slack, 1.0, 1e-12));
    CHECK(bell.verdict == Verdict::holds);

    CHECK_THROWS_WITH_AS(check_subadditivity(prod, QParam(0.9)),
                         doctest::Contains("QOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(check_subadditivity(maximally_mixed(4, {4}), QParam(2.0)),
                         doctest::Contains("BadPartition"), Error);
}

TEST_CASE("triangle golden cases") {
    // any pure bipartite state has equal marginal entropies
    const InequalityReport pure = check_triangle(density(haar_random_pure({2, 2}, Seed{3, 3})),
                                                 QParam(2.0));
    CHECK(close(pure.lhs, 0.0, 1e-10));
    CHECK(pure.verdict == Verdict::holds);

    // rho_A x pure_B hits equality
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 0.8;
    d(1, 1) = 0.2;
    const CMatrix rho_a(d, {2});
    Mat p = Mat::Zero(2, 2);
    p(0, 0) = 1.0;
    const DensityMatrix prod = validate_density(tensor(rho_a, CMatrix(p, {2})));
    const InequalityReport eq = check_triangle(prod, QParam(2.0));
    CHECK(close(eq.slack, 0.0, 1e-12));
    CHECK(eq.verdict == Verdict::holds);
}

TEST_CASE("subadditivity and triangle hold on random states") {
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
        for (int trial = 0; trial < 300; ++trial) {
            const DensityMatrix rho = random_two_qubit(static_cast<std::uint64_t>(trial),
                                                       trial % 2 == 0 ? 4 : 2);
            CHECK(check_subadditivity(rho, QParam(q)).slack >= -1e-9);
            CHECK(check_triangle(rho, QParam(q)).slack >= -1e-9);
        }
    }
}

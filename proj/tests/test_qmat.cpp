#include <doctest.h>

#include "tqe/qmat.hpp"
#include "tqe/states.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace tqe;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

CMatrix identity(int d, std::vector<int> dims) {
    return CMatrix(Mat::Identity(d, d), std::move(dims));
}

CMatrix pauli_y() {
    Mat y(2, 2);
    y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return CMatrix(y, {2});
}

// Plain-loop matrix multiply, independent of Eigen's operator*.
Mat naive_multiply(const Mat& a, const Mat& b) {
    Mat out = Mat::Zero(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (int k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

}  // namespace

TEST_CASE("tensor products") {
    const CMatrix i2 = identity(2, {2});
    const CMatrix i4 = tensor(i2, i2);
    CHECK(i4.dim() == 4);
    CHECK(i4.dims() == std::vector<int>{2, 2});
    CHECK((i4.mat() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    // sigma_y x sigma_y squares to the identity
    const CMatrix yy = tensor(pauli_y(), pauli_y());
    CHECK((yy.mat() * yy.mat() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-15);

    // |0><0| x |1><1| = diag(0,1,0,0)
    Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const CMatrix proj = tensor(CMatrix(p0, {2}), CMatrix(p1, {2}));
    Mat expected = Mat::Zero(4, 4);
    expected(1, 1) = 1.0;
    CHECK((proj.mat() - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor trace is multiplicative") {
    Rng rng(Seed{41, 7});
    for (int trial = 0; trial < 20; ++trial) {
        Mat a(3, 3), b(4, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = rng.cgauss();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) b(i, j) = rng.cgauss();
        const CMatrix t = tensor(CMatrix(a, {3}), CMatrix(b, {4}));
        const Complex lhs = t.mat().trace();
        const Complex rhs = a.trace() * b.trace();
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
    const DensityMatrix bell = density(ghz(2));
    const DensityMatrix rho_a = partial_trace(bell, {0});
    CHECK(rho_a.dim() == 2);
    CHECK((rho_a.mat() - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("partial trace argument validation") {
    const DensityMatrix bell = density(ghz(2));
    CHECK_THROWS_WITH_AS(partial_trace(bell, {}), doctest::Contains("EmptyKeepSet"), Error);
    CHECK_THROWS_WITH_AS(partial_trace(bell, {0, 1}), doctest::Contains("EmptyComplement"),
                         Error);
    CHECK_THROWS_WITH_AS(partial_trace(bell, {2}), doctest::Contains("IndexOutOfRange"),
                         Error);
}

TEST_CASE("W state reduction against a hand-built 8x8 oracle") {
    // |W> = (|100> + |010> + |001>)/sqrt(3); indices 4, 2, 1 in row-major order
    std::vector<Complex> amp(8, 0.0);
    amp[4] = amp[2] = amp[1] = 1.0 / std::sqrt(3.0);

    // projector and trace over the last qubit by direct index arithmetic
    Complex proj[8][8];
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) proj[i][j] = amp[i] * std::conj(amp[j]);
    Mat oracle = Mat::Zero(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int t = 0; t < 2; ++t) oracle(a, b) += proj[2 * a + t][2 * b + t];

    // analytic form: (1/3)|00><00| + (2/3)|Psi+><Psi+|
    Mat analytic = Mat::Zero(4, 4);
    analytic(0, 0) = 1.0 / 3.0;
    analytic(1, 1) = analytic(2, 2) = analytic(1, 2) = analytic(2, 1) = 1.0 / 3.0;
    CHECK((oracle - analytic).cwiseAbs().maxCoeff() <= 1e-15);

    const DensityMatrix rho_ab = reduced_density(w_state(3), {0, 1});
    CHECK((rho_ab.mat() - oracle).cwiseAbs().maxCoeff() <= 1e-15);

    const EigenSystem sys = hermitian_eigen(rho_ab.cm());
    CHECK(close(sys.values(0), 2.0 / 3.0, 1e-12));
    CHECK(close(sys.values(1), 1.0 / 3.0, 1e-12));
    CHECK(close(sys.values(2), 0.0, 1e-12));
    CHECK(close(sys.values(3), 0.0, 1e-12));
}

TEST_CASE("partial trace composes") {
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = with_dims(
            random_mixed(8, 8, Seed{100, static_cast<std::uint64_t>(trial)}), {2, 2, 2});
        const DensityMatrix direct = partial_trace(rho, {0});
        const DensityMatrix step1 = partial_trace(rho, {0, 2});  // traces out B
        const DensityMatrix step2 = partial_trace(step1, {0});   // traces out C
        CHECK((direct.mat() - step2.mat()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(close(direct.mat().trace().real(), 1.0, 1e-12));
    }
}

TEST_CASE("hermitian_eigen on simple spectra") {
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const EigenSystem sys = hermitian_eigen(CMatrix(d, {3}));
    CHECK(sys.values(0) == 3.0);
    CHECK(sys.values(1) == 2.0);
    CHECK(sys.values(2) == 1.0);

    const EigenSystem half = hermitian_eigen(CMatrix(0.5 * Mat::Identity(2, 2), {2}));
    CHECK(close(half.values(0), 0.5, 1e-15));
    CHECK(close(half.values(1), 0.5, 1e-15));

    Mat skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_WITH_AS(hermitian_eigen(CMatrix(skew, {2})),
                         doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("hermitian_eigen reconstructs random matrices") {
    for (int dim : {2, 5, 8, 17, 32}) {
        Rng rng(Seed{7, static_cast<std::uint64_t>(dim)});
        Mat g(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) g(i, j) = rng.cgauss();
        const Mat h = 0.5 * (g + g.adjoint());
        const EigenSystem sys = hermitian_eigen(CMatrix(h, {dim}));

        Mat rebuilt = Mat::Zero(dim, dim);
        for (int i = 0; i < dim; ++i)
            rebuilt += sys.values(i) * (sys.vectors.col(i) * sys.vectors.col(i).adjoint());
        CHECK((rebuilt - h).cwiseAbs().maxCoeff() <= 1e-10);
        for (int i = 1; i < dim; ++i) CHECK(sys.values(i - 1) >= sys.values(i));
        CHECK((sys.vectors.adjoint() * sys.vectors - Mat::Identity(dim, dim))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
    }
}

TEST_CASE("mat_power") {
    CHECK_THROWS(validate_density(identity(2, {2})));  // trace 2

    const DensityMatrix mixed =
        validate_density(CMatrix(0.5 * Mat::Identity(2, 2), {2}));
    const CMatrix sq = mat_power(mixed, 2.0);
    CHECK((sq.mat() - 0.25 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);

    // pure projector is idempotent under any positive power
    const DensityMatrix proj = density(haar_random_pure({4}, Seed{3, 3}));
    for (double p : {0.5, 1.7, 3.0}) {
        const CMatrix powed = mat_power(proj, p);
        CHECK((powed.mat() - proj.mat()).cwiseAbs().maxCoeff() <= 1e-12);
    }

    // Werner(0.5) squared against a plain-loop multiply oracle
    const DensityMatrix w = werner(0.5);
    const Mat direct = naive_multiply(w.mat(), w.mat());
    CHECK((mat_power(w, 2.0).mat() - direct).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK_THROWS(mat_power(w, 0.0));
    CHECK_THROWS(mat_power(w, -1.0));

    // unit trace is preserved at p = 1
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix rho =
            random_mixed(6, 4, Seed{11, static_cast<std::uint64_t>(trial)});
        CHECK(close(mat_power(rho, 1.0).mat().trace().real(), 1.0, 1e-12));
    }
}

TEST_CASE("validate_density error taxonomy") {
    CHECK_NOTHROW(validate_density(CMatrix(0.5 * Mat::Identity(2, 2), {2})));

    Mat not_psd = Mat::Zero(2, 2);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(validate_density(CMatrix(not_psd, {2})),
                         doctest::Contains("NotPSD"), Error);

    Mat bad_trace = Mat::Zero(2, 2);
    bad_trace(0, 0) = bad_trace(1, 1) = 0.6;
    CHECK_THROWS_WITH_AS(validate_density(CMatrix(bad_trace, {2})),
                         doctest::Contains("TraceNotOne"), Error);

    Mat not_herm = 0.5 * Mat::Identity(2, 2);
    not_herm(0, 1) = Complex(0.0, 0.3);
    CHECK_THROWS_WITH_AS(validate_density(CMatrix(not_herm, {2})),
                         doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("CMatrix dimension validation") {
    CHECK_THROWS_WITH_AS(CMatrix(Mat::Identity(4, 4), {2, 3}), doctest::Contains("BadDims"),
                         Error);
    CHECK_THROWS_WITH_AS(CMatrix(Mat::Identity(4, 3), {2, 2}), doctest::Contains("BadDims"),
                         Error);
    CHECK_NOTHROW(CMatrix(Mat::Identity(6, 6), {2, 3}));
}

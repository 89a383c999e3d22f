#include "tqe/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tqe {

namespace {

long long product(const std::vector<int>& dims) {
    long long p = 1;
    for (int d : dims) p *= d;
    return p;
}

// Row-major strides of the subsystem multi-index.
std::vector<long> strides_of(const std::vector<int>& dims) {
    const int m = static_cast<int>(dims.size());
    std::vector<long> s(m, 1);
    for (int i = m - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
    return s;
}

// Flat offsets of every multi-index over the selected subsystems.
std::vector<long> enumerate_offsets(const std::vector<int>& sel,
                                    const std::vector<int>& dims,
                                    const std::vector<long>& stride) {
    long count = 1;
    for (int s : sel) count *= dims[s];
    std::vector<long> offsets(count, 0);
    long repeat = count;
    for (int s : sel) {
        repeat /= dims[s];
        long idx = 0;
        while (idx < count) {
            for (int v = 0; v < dims[s]; ++v)
                for (long r = 0; r < repeat; ++r) offsets[idx++] += v * stride[s];
        }
    }
    return offsets;
}

}  // namespace

CMatrix::CMatrix(Mat m, std::vector<int> subsystem_dims)
    : m_(std::move(m)), dims_(std::move(subsystem_dims)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
        throw Error("BadDims", "matrix must be square and nonempty");
    for (int d : dims_)
        if (d <= 0) throw Error("BadDims", "subsystem dims must be positive");
    if (dims_.empty() || product(dims_) != m_.rows())
        throw Error("BadDims", "product of subsystem dims (" + std::to_string(product(dims_)) +
                                   ") != matrix dim (" + std::to_string(m_.rows()) + ")");
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    const int da = a.dim(), db = b.dim();
    Mat out(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.mat()(i, j) * b.mat();
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return CMatrix(std::move(out), std::move(dims));
}

std::vector<int> complement_indices(const std::vector<int>& keep, int n_subsystems) {
    std::vector<bool> kept(n_subsystems, false);
    for (int k : keep) {
        if (k < 0 || k >= n_subsystems)
            throw Error("IndexOutOfRange", "subsystem index " + std::to_string(k) +
                                               " outside [0," + std::to_string(n_subsystems) + ")");
        kept[k] = true;
    }
    std::vector<int> rest;
    for (int i = 0; i < n_subsystems; ++i)
        if (!kept[i]) rest.push_back(i);
    return rest;
}

std::vector<long> subsystem_offsets(const std::vector<int>& subset,
                                    const std::vector<int>& dims) {
    for (int s : subset)
        if (s < 0 || s >= static_cast<int>(dims.size()))
            throw Error("IndexOutOfRange", "subsystem index " + std::to_string(s));
    return enumerate_offsets(subset, dims, strides_of(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep_in) {
    const auto& dims = rho.dims();
    const int m = static_cast<int>(dims.size());

    std::vector<int> keep = keep_in;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    if (keep.empty()) throw Error("EmptyKeepSet", "keep set must be nonempty");
    const std::vector<int> traced = complement_indices(keep, m);
    if (traced.empty()) throw Error("EmptyComplement", "keep set covers every subsystem");

    const auto stride = strides_of(dims);
    const auto kept_off = enumerate_offsets(keep, dims, stride);
    const auto traced_off = enumerate_offsets(traced, dims, stride);

    const long dk = static_cast<long>(kept_off.size());
    Mat out = Mat::Zero(dk, dk);
    const Mat& src = rho.mat();
    for (long a = 0; a < dk; ++a)
        for (long b = 0; b < dk; ++b) {
            Complex sum = 0.0;
            for (long t : traced_off) sum += src(kept_off[a] + t, kept_off[b] + t);
            out(a, b) = sum;
        }

    std::vector<int> out_dims;
    out_dims.reserve(keep.size());
    for (int k : keep) out_dims.push_back(dims[k]);
    return DensityMatrix::unchecked(CMatrix(std::move(out), std::move(out_dims)));
}

EigenSystem hermitian_eigen(const CMatrix& m, double herm_tol) {
    const Mat& a = m.mat();
    const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (dev > herm_tol)
        throw Error("NotHermitian", "max |M - M^dag| = " + std::to_string(dev));

    Eigen::SelfAdjointEigenSolver<Mat> solver(a);
    if (solver.info() != Eigen::Success)
        throw Error("EigenFailure", "self-adjoint eigensolver did not converge");

    const int n = m.dim();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return solver.eigenvalues()(i) > solver.eigenvalues()(j);
    });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        sys.values(i) = solver.eigenvalues()(order[i]);
        sys.vectors.col(i) = solver.eigenvectors().col(order[i]);
    }
    return sys;
}

CMatrix mat_power(const DensityMatrix& rho, double p) {
    if (!(p > 0.0)) throw Error("BadExponent", "exponent must be positive");
    EigenSystem sys = hermitian_eigen(rho.cm());
    const int n = rho.dim();
    // fractional powers amplify spectrum noise (1e-17 -> 3e-9 at p = 1/2),
    // so round-off eigenvalues below the noise floor are zeroed outright
    constexpr double noise_floor = 1e-13;
    Mat out = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double lam = std::clamp(sys.values(i), 0.0, 1.0);
        if (lam <= noise_floor) continue;
        out += std::pow(lam, p) * (sys.vectors.col(i) * sys.vectors.col(i).adjoint());
    }
    return CMatrix(std::move(out), rho.dims());
}

DensityMatrix validate_density(const CMatrix& m, const Tolerances& tol) {
    const Mat& a = m.mat();
    const double herm_dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol.herm)
        throw Error("NotHermitian", "max |M - M^dag| = " + std::to_string(herm_dev));

    const double tr_dev = std::abs(a.trace() - Complex(1.0, 0.0));
    if (tr_dev > tol.norm)
        throw Error("TraceNotOne", "|tr - 1| = " + std::to_string(tr_dev));

    Eigen::SelfAdjointEigenSolver<Mat> solver(a, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol.psd)
        throw Error("NotPSD", "min eigenvalue = " + std::to_string(min_eig));

    return DensityMatrix::unchecked(m);
}

DensityMatrix with_dims(const DensityMatrix& rho, std::vector<int> subsystem_dims) {
    return DensityMatrix::unchecked(CMatrix(rho.mat(), std::move(subsystem_dims)));
}

}  // namespace tqe

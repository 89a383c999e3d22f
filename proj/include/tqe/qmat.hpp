#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqe {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Error with a stable machine-readable code ("NotHermitian", "BadPartition", ...)
/// in addition to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Tolerances {
    double herm = 1e-10;
    double norm = 1e-10;
    double psd = 1e-9;
};

/// Dense complex square matrix tagged with an ordered subsystem dimension list
/// whose product equals the matrix dimension.
class CMatrix {
public:
    CMatrix(Mat m, std::vector<int> subsystem_dims);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Mat& mat() const { return m_; }
    const std::vector<int>& dims() const { return dims_; }

private:
    Mat m_;
    std::vector<int> dims_;
};

/// Hermitian, PSD, unit-trace matrix. Construct through validate_density, or
/// through unchecked() on paths that preserve the invariants by construction
/// (partial traces of valid states, projectors of normalized vectors, ...).
class DensityMatrix {
public:
    static DensityMatrix unchecked(CMatrix m) { return DensityMatrix(std::move(m)); }

    int dim() const { return cm_.dim(); }
    const Mat& mat() const { return cm_.mat(); }
    const std::vector<int>& dims() const { return cm_.dims(); }
    const CMatrix& cm() const { return cm_; }

private:
    explicit DensityMatrix(CMatrix m) : cm_(std::move(m)) {}
    CMatrix cm_;
};

struct EigenSystem {
    RealVec values;  // sorted descending, ties stable by solver index
    Mat vectors;     // orthonormal columns, matched to values
};

/// Kronecker product; subsystem dims concatenate.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Reduced density matrix over the kept subsystem indices (original relative
/// order). Throws EmptyKeepSet, IndexOutOfRange, EmptyComplement.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Eigendecomposition of a Hermitian matrix (checked within herm_tol).
EigenSystem hermitian_eigen(const CMatrix& m, double herm_tol = Tolerances{}.herm);

/// rho^p from the spectrum clamped to [0,1]. Requires p > 0.
CMatrix mat_power(const DensityMatrix& rho, double p);

/// Checks Hermiticity, unit trace and positivity in that order; throws
/// NotHermitian / TraceNotOne / NotPSD on the first violation.
DensityMatrix validate_density(const CMatrix& m, const Tolerances& tol = {});

/// Same matrix, reinterpreted subsystem structure (product must match).
DensityMatrix with_dims(const DensityMatrix& rho, std::vector<int> subsystem_dims);

/// Sorted, deduplicated complement of `keep` in {0, ..., n_subsystems-1}.
std::vector<int> complement_indices(const std::vector<int>& keep, int n_subsystems);

/// Flat row-major offsets of all multi-indices over `subset` (taken in the
/// given order, first index slowest), zeros in the other subsystems.
std::vector<long> subsystem_offsets(const std::vector<int>& subset,
                                    const std::vector<int>& dims);

}  // namespace tqe

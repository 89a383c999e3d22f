#include "tqe/states.hpp"

#include <cmath>
#include <numbers>

namespace tqe {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kRankTol = 1e-12;

long long product(const std::vector<int>& dims) {
    long long p = 1;
    for (int d : dims) p *= d;
    return p;
}

// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

PureState::PureState(Vec amplitudes, std::vector<int> subsystem_dims)
    : amp_(std::move(amplitudes)), dims_(std::move(subsystem_dims)) {
    if (dims_.empty()) throw Error("BadDims", "subsystem dims must be nonempty");
    for (int d : dims_)
        if (d <= 0) throw Error("BadDims", "subsystem dims must be positive");
    if (product(dims_) != amp_.size())
        throw Error("BadDims", "amplitude length != product of subsystem dims");
    const double n2 = amp_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTol)
        throw Error("NotNormalized", "squared norm deviates from 1 by " + std::to_string(n2 - 1.0));
}

std::uint64_t derive_stream(std::uint64_t master, std::uint64_t stream) {
    // stream -> master + C*(stream+1) is injective for odd C, and mix64 is a
    // bijection, so distinct stream indices give distinct seeds.
    return mix64(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

Rng::Rng(Seed s) : engine_(derive_stream(s.master, s.stream)) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_gaussian_;
    }
    // Box-Muller on raw uniforms; u1 in (0,1] keeps the log finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

Complex Rng::cgauss() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
}

PureState ghz(int n_qubits) {
    if (n_qubits < 2) throw Error("TooFewQubits", "GHZ needs at least 2 qubits");
    const long dim = 1L << n_qubits;
    Vec amp = Vec::Zero(dim);
    amp(0) = amp(dim - 1) = 1.0 / std::sqrt(2.0);
    return PureState(std::move(amp), std::vector<int>(n_qubits, 2));
}

PureState w_state(int n_qubits) {
    if (n_qubits < 2) throw Error("TooFewQubits", "W state needs at least 2 qubits");
    const long dim = 1L << n_qubits;
    Vec amp = Vec::Zero(dim);
    const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (int j = 0; j < n_qubits; ++j) amp(1L << j) = a;
    return PureState(std::move(amp), std::vector<int>(n_qubits, 2));
}

PureState haar_random_pure(const std::vector<int>& dims, Seed seed) {
    if (dims.empty()) throw Error("BadDims", "need at least one subsystem");
    for (int d : dims)
        if (d < 2) throw Error("BadDims", "subsystem dims must be >= 2");
    Rng rng(seed);
    Vec amp(product(dims));
    for (long i = 0; i < amp.size(); ++i) amp(i) = rng.cgauss();
    amp /= amp.norm();
    return PureState(std::move(amp), dims);
}

DensityMatrix random_mixed(int dim, int rank, Seed seed) {
    if (dim < 1 || rank < 1 || rank > dim)
        throw Error("BadRank", "need 1 <= rank <= dim");
    Rng rng(seed);
    Mat a(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) a(i, j) = rng.cgauss();
    a /= a.norm();
    Mat rho = a * a.adjoint();  // == tr_ancilla |a><a| for the dim x rank pure state
    return DensityMatrix::unchecked(CMatrix(std::move(rho), {dim}));
}

PureState purify(const DensityMatrix& rho) {
    EigenSystem sys = hermitian_eigen(rho.cm());
    int rank = 0;
    while (rank < rho.dim() && sys.values(rank) > kRankTol) ++rank;
    if (rank == 0) throw Error("NotDensity", "input has no positive spectrum");

    const int d = rho.dim();
    Vec amp = Vec::Zero(static_cast<long>(d) * rank);
    for (int j = 0; j < rank; ++j) {
        const double w = std::sqrt(sys.values(j));
        for (int i = 0; i < d; ++i) amp(static_cast<long>(i) * rank + j) = w * sys.vectors(i, j);
    }
    amp /= amp.norm();
    return PureState(std::move(amp), {d, rank});
}

DensityMatrix werner(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("BadWeight", "mixing weight outside [0,1]");
    Vec bell = Vec::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    Mat rho = p * (bell * bell.adjoint()) + (1.0 - p) * 0.25 * Mat::Identity(4, 4);
    return DensityMatrix::unchecked(CMatrix(std::move(rho), {2, 2}));
}

DensityMatrix density(const PureState& psi) {
    Mat rho = psi.amp() * psi.amp().adjoint();
    return DensityMatrix::unchecked(CMatrix(std::move(rho), psi.dims()));
}

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
    return partial_trace(density(psi), keep);
}

PureState permute_subsystems(const PureState& psi, const std::vector<int>& perm) {
    const auto& dims = psi.dims();
    const int m = psi.n_subsystems();
    if (static_cast<int>(perm.size()) != m)
        throw Error("BadPartition", "permutation length != subsystem count");
    std::vector<bool> seen(m, false);
    for (int p : perm) {
        if (p < 0 || p >= m || seen[p]) throw Error("BadPartition", "not a permutation");
        seen[p] = true;
    }

    std::vector<long> stride(m, 1);
    for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

    std::vector<int> new_dims(m);
    for (int i = 0; i < m; ++i) new_dims[i] = dims[perm[i]];
    std::vector<long> new_stride(m, 1);
    for (int i = m - 2; i >= 0; --i) new_stride[i] = new_stride[i + 1] * new_dims[i + 1];

    Vec out(psi.dim());
    for (long idx = 0; idx < psi.dim(); ++idx) {
        // idx decoded in the new ordering; each digit maps back to its old slot
        long rem = idx, old_idx = 0;
        for (int i = 0; i < m; ++i) {
            const long digit = rem / new_stride[i];
            rem %= new_stride[i];
            old_idx += digit * stride[perm[i]];
        }
        out(idx) = psi.amp()(old_idx);
    }
    return PureState(std::move(out), std::move(new_dims));
}

Mat haar_random_unitary(int dim, Rng& rng) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.cgauss();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase ambiguity so the distribution is Haar
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace tqe

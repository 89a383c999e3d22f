#pragma once

#include "tqe/qmat.hpp"

#include <cstdint>
#include <random>

namespace tqe {

/// Normalized complex amplitude vector with subsystem dimension list.
class PureState {
public:
    PureState(Vec amplitudes, std::vector<int> subsystem_dims);

    int dim() const { return static_cast<int>(amp_.size()); }
    const Vec& amp() const { return amp_; }
    const std::vector<int>& dims() const { return dims_; }
    int n_subsystems() const { return static_cast<int>(dims_.size()); }

private:
    Vec amp_;
    std::vector<int> dims_;
};

/// Master seed plus stream index; distinct indices yield distinct,
/// order-independent random streams.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

std::uint64_t derive_stream(std::uint64_t master, std::uint64_t stream);

/// Deterministic random stream. Uniform/Gaussian values are produced from the
/// raw engine words, so output is identical across standard libraries.
class Rng {
public:
    explicit Rng(Seed s);

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // standard normal
    Complex cgauss();   // independent standard normal real and imaginary parts

private:
    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

PureState ghz(int n_qubits);
PureState w_state(int n_qubits);

/// Amplitudes drawn as iid standard complex Gaussians, then normalized.
PureState haar_random_pure(const std::vector<int>& dims, Seed seed);

/// Partial trace of a Haar-random pure state on a dim x rank system.
DensityMatrix random_mixed(int dim, int rank, Seed seed);

/// Bipartite purification on dim x rank; reduction on the first factor
/// reproduces the input within 1e-10.
PureState purify(const DensityMatrix& rho);

/// p |Phi+><Phi+| + (1-p) I/4 on two qubits.
DensityMatrix werner(double p);

/// Projector |psi><psi| as a density matrix.
DensityMatrix density(const PureState& psi);

/// Reduction of a pure state onto the kept subsystems.
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);

/// Relabel subsystems: new subsystem i is old subsystem perm[i].
PureState permute_subsystems(const PureState& psi, const std::vector<int>& perm);

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
Mat haar_random_unitary(int dim, Rng& rng);

}  // namespace tqe

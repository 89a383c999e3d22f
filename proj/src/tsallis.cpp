#include "tqe/tsallis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tqe {

double f_q(double x, const QParam& q) {
    if (!(x >= 0.0 && x <= 1.0))
        throw Error("XOutOfRange", "f_q argument outside [0,1]: " + std::to_string(x));
    if (!q.in_fq_range())
        throw Error("QOutOfFqRange", "f_q is stated for 1 <= q <= 4, got " + std::to_string(q.q()));
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    const double a = 0.5 * (1.0 + s);
    const double b = 0.5 * (1.0 - s);
    if (q.is_limit()) {
        double h = 0.0;
        if (a > 0.0) h -= a * std::log(a);
        if (b > 0.0) h -= b * std::log(b);
        return h;
    }
    return (1.0 - std::pow(a, q.q()) - std::pow(b, q.q())) / (q.q() - 1.0);
}

double fq_additivity_gap(double x, double y, const QParam& q) {
    if (!(x >= 0.0 && y >= 0.0 && x * x + y * y <= 1.0))
        throw Error("ArgOutOfRange", "need x, y >= 0 with x^2 + y^2 <= 1");
    const double z = std::min(1.0, std::hypot(x, y));
    return f_q(z, q) - f_q(x, q) - f_q(y, q);
}

FqRegime fq_regime(const QParam& q) {
    if (!q.in_fq_range())
        throw Error("QOutOfFqRange", "regime defined for 1 <= q <= 4");
    if (q.in_monogamy_set()) return FqRegime::equality;
    if (q.q() > 2.0 && q.q() < 3.0) return FqRegime::superadditive;
    return FqRegime::subadditive;
}

GapExtrema fq_gap_scan(const QParam& q, int grid_points) {
    if (grid_points < 2) throw Error("GridError", "grid needs at least 2 points per axis");
    GapExtrema ext;
    ext.min_gap = std::numeric_limits<double>::infinity();
    ext.max_gap = -std::numeric_limits<double>::infinity();
    const double step = 1.0 / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        const double x = i * step;
        for (int j = 0; j < grid_points; ++j) {
            const double y = j * step;
            if (x * x + y * y > 1.0) continue;
            const double g = fq_additivity_gap(x, y, q);
            ext.min_gap = std::min(ext.min_gap, g);
            ext.max_gap = std::max(ext.max_gap, g);
            ++ext.points;
        }
    }
    return ext;
}

namespace {

constexpr double kRankTol = 1e-12;

std::vector<int> normalize_group(const std::vector<int>& group, int n_subsystems) {
    std::vector<int> g = group;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.empty() || static_cast<int>(g.size()) >= n_subsystems)
        throw Error("BadPartition", "bipartition needs two nonempty groups");
    for (int s : g)
        if (s < 0 || s >= n_subsystems)
            throw Error("BadPartition", "subsystem index " + std::to_string(s) + " out of range");
    return g;
}

double entropy_from_probs(const double* lam, int n, const QParam& q) {
    constexpr double noise_floor = 1e-13;  // matches tsallis_entropy_spectrum
    if (q.is_limit()) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double p = std::clamp(lam[i], 0.0, 1.0);
            if (p > noise_floor) s -= p * std::log(p);
        }
        return s;
    }
    double trq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double p = std::clamp(lam[i], 0.0, 1.0);
        if (p > noise_floor) trq += std::pow(p, q.q());
    }
    return (1.0 - trq) / (q.q() - 1.0);
}

// Ensemble search state for one (rho, bipartition, q). Members of a size-k
// decomposition are tracked directly as subnormalized vectors; two-row
// rotations preserve the underlying k x r isometry.
class RoofSearch {
public:
    RoofSearch(const DensityMatrix& rho, const std::vector<int>& first_group,
               const QParam& q, RoofMode mode, const RoofOptions& opts)
        : q_(q), mode_(mode), opts_(opts), dim_(rho.dim()) {
        if (dim_ > 16) throw Error("TooLarge", "convex roof is desk scale (dim <= 16)");

        const int m = static_cast<int>(rho.dims().size());
        const std::vector<int> group = normalize_group(first_group, m);
        const std::vector<int> rest = complement_indices(group, m);
        long da = 1, db = 1;
        for (int s : group) da *= rho.dims()[s];
        for (int s : rest) db *= rho.dims()[s];
        // pure members have equal marginal spectra on both sides
        const std::vector<int>& side = (da <= db) ? group : rest;
        const std::vector<int>& other = (da <= db) ? rest : group;
        side_off_ = subsystem_offsets(side, rho.dims());
        other_off_ = subsystem_offsets(other, rho.dims());

        EigenSystem sys = hermitian_eigen(rho.cm());
        rank_ = 0;
        while (rank_ < dim_ && sys.values(rank_) > kRankTol) ++rank_;
        if (rank_ == 0) throw Error("NotDensity", "input has no positive spectrum");
        w_.resize(dim_, rank_);
        for (int j = 0; j < rank_; ++j)
            w_.col(j) = std::sqrt(sys.values(j)) * sys.vectors.col(j);
    }

    RoofResult run() {
        RoofResult res;
        res.mode = mode_;
        res.bound_direction = (mode_ == RoofMode::minimize)
                                  ? BoundDirection::upper_bound_on_min
                                  : BoundDirection::lower_bound_on_max;
        if (rank_ == 1) {
            res.value = member_term(w_.col(0));
            res.ensemble_size = 1;
            res.converged = true;
            return res;
        }

        const int k = opts_.ensemble_size > 0 ? opts_.ensemble_size
                                              : std::min(rank_ + 2, opts_.max_ensemble);
        if (k < rank_ || k > opts_.max_ensemble)
            throw Error("BadEnsembleSize", "ensemble size must lie in [rank, max_ensemble]");
        res.ensemble_size = k;

        double best = std::numeric_limits<double>::infinity();
        bool best_converged = false;
        int total_sweeps = 0;
        for (int restart = 0; restart < std::max(1, opts_.restarts); ++restart) {
            auto [value, sweeps, converged] = run_restart(k, restart);
            total_sweeps += sweeps;
            if (value < best) {
                best = value;
                best_converged = converged;
            }
        }
        res.value = (mode_ == RoofMode::minimize) ? best : -best;
        res.iterations_used = total_sweeps;
        res.converged = best_converged;
        return res;
    }

private:
    double sign() const { return mode_ == RoofMode::minimize ? 1.0 : -1.0; }

    // p * S_q of the member's marginal, from the subnormalized vector.
    double member_term(const Vec& psi) const {
        const double p = psi.squaredNorm();
        if (p < 1e-15) return 0.0;
        const int na = static_cast<int>(side_off_.size());
        if (na == 2) {
            double r00 = 0.0, r11 = 0.0;
            Complex r01 = 0.0;
            for (long t : other_off_) {
                const Complex a0 = psi(side_off_[0] + t);
                const Complex a1 = psi(side_off_[1] + t);
                r00 += std::norm(a0);
                r11 += std::norm(a1);
                r01 += a0 * std::conj(a1);
            }
            const double tr = r00 + r11;
            const double det = r00 * r11 - std::norm(r01);
            const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
            const double lam[2] = {0.5 * (tr + disc) / p, 0.5 * (tr - disc) / p};
            return p * entropy_from_probs(lam, 2, q_);
        }
        Mat red(na, na);
        for (int a = 0; a < na; ++a)
            for (int b = a; b < na; ++b) {
                Complex s = 0.0;
                for (long t : other_off_)
                    s += psi(side_off_[a] + t) * std::conj(psi(side_off_[b] + t));
                red(a, b) = s;
                red(b, a) = std::conj(s);
            }
        Eigen::SelfAdjointEigenSolver<Mat> es(red, Eigen::EigenvaluesOnly);
        std::vector<double> lam(na);
        for (int i = 0; i < na; ++i) lam[i] = es.eigenvalues()(i) / p;
        return p * entropy_from_probs(lam.data(), na, q_);
    }

    std::tuple<double, int, bool> run_restart(int k, int restart) {
        std::vector<Vec> psi(k, Vec::Zero(dim_));
        if (restart == 0) {
            // eigen-ensemble start: isometry [I_r; 0]
            for (int i = 0; i < rank_; ++i) psi[i] = w_.col(i);
        } else {
            Rng rng(Seed{opts_.seed, static_cast<std::uint64_t>(restart)});
            Mat g(k, rank_);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < rank_; ++j) g(i, j) = rng.cgauss();
            Eigen::HouseholderQR<Mat> qr(g);
            Mat v = qr.householderQ() * Mat::Identity(k, rank_);
            for (int i = 0; i < k; ++i) psi[i] = w_ * v.row(i).transpose();
        }

        std::vector<double> term(k);
        double total = 0.0;
        for (int i = 0; i < k; ++i) {
            term[i] = sign() * member_term(psi[i]);
            total += term[i];
        }

        Vec cand_a(dim_), cand_b(dim_);
        int sweeps = 0;
        bool converged = false;
        while (sweeps < opts_.max_iters) {
            const double before = total;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    optimize_pair(psi[a], psi[b], term[a], term[b], total, cand_a, cand_b);
            ++sweeps;
            if (before - total < opts_.conv_tol) {
                converged = true;
                break;
            }
        }
        return {total, sweeps, converged};
    }

    // Best two-row rotation for the pair: coarse (theta, phi) grid, then
    // pattern search with halving steps.
    void optimize_pair(Vec& pa, Vec& pb, double& ta, double& tb, double& total,
                       Vec& cand_a, Vec& cand_b) {
        const auto eval = [&](double th, double ph) {
            const double c = std::cos(th), s = std::sin(th);
            const Complex e(std::cos(ph), std::sin(ph));
            cand_a.noalias() = c * pa + s * e * pb;
            cand_b.noalias() = (-s * std::conj(e)) * pa + c * pb;
            return sign() * member_term(cand_a) + sign() * member_term(cand_b);
        };

        constexpr int kGrid = 6;
        double best_val = ta + tb;  // identity rotation
        double best_th = 0.0, best_ph = 0.0;
        for (int i = 0; i < kGrid; ++i) {
            const double th = (i + 1) * std::numbers::pi / (kGrid + 1);
            for (int j = 0; j < kGrid; ++j) {
                const double ph = j * 2.0 * std::numbers::pi / kGrid;
                const double v = eval(th, ph);
                if (v < best_val - 1e-15) {
                    best_val = v;
                    best_th = th;
                    best_ph = ph;
                }
            }
        }

        double dth = std::numbers::pi / (2.0 * (kGrid + 1));
        double dph = std::numbers::pi / kGrid;
        while (std::max(dth, dph) > 3e-4) {
            bool improved = false;
            const double moves[4][2] = {{dth, 0.0}, {-dth, 0.0}, {0.0, dph}, {0.0, -dph}};
            for (const auto& mv : moves) {
                const double v = eval(best_th + mv[0], best_ph + mv[1]);
                if (v < best_val - 1e-15) {
                    best_val = v;
                    best_th += mv[0];
                    best_ph += mv[1];
                    improved = true;
                }
            }
            if (!improved) {
                dth *= 0.5;
                dph *= 0.5;
            }
        }

        if (best_th == 0.0 && best_ph == 0.0) return;
        const double c = std::cos(best_th), s = std::sin(best_th);
        const Complex e(std::cos(best_ph), std::sin(best_ph));
        cand_a.noalias() = c * pa + s * e * pb;
        cand_b.noalias() = (-s * std::conj(e)) * pa + c * pb;
        pa.swap(cand_a);
        pb.swap(cand_b);
        const double na = sign() * member_term(pa);
        const double nb = sign() * member_term(pb);
        total += na + nb - ta - tb;
        ta = na;
        tb = nb;
    }

    QParam q_;
    RoofMode mode_;
    RoofOptions opts_;
    int dim_;
    int rank_ = 0;
    Mat w_;  // eigenvectors scaled by sqrt(eigenvalue), positive spectrum only
    std::vector<long> side_off_, other_off_;
};

}  // namespace

double tsallis_ent_pure(const PureState& psi, const std::vector<int>& first_group,
                        const QParam& q) {
    const int m = psi.n_subsystems();
    const std::vector<int> group = normalize_group(first_group, m);
    const std::vector<int> rest = complement_indices(group, m);
    long da = 1, db = 1;
    for (int s : group) da *= psi.dims()[s];
    for (int s : rest) db *= psi.dims()[s];
    const std::vector<int>& side = (da <= db) ? group : rest;
    return tsallis_entropy(reduced_density(psi, side), q);
}

double tsallis_ent_2q(const DensityMatrix& rho, const QParam& q) {
    if (!q.in_fq_range())
        throw Error("QOutOfFqRange", "closed form is stated for 1 <= q <= 4");
    return f_q(concurrence_2q(rho), q);
}

TeoaBound teoa_2q_bound(const DensityMatrix& rho, const QParam& q) {
    if (!q.in_fq_range())
        throw Error("QOutOfFqRange", "bound is stated for 1 <= q <= 4");
    // round-off can push the lambda sum past 1 by ~1e-15; f_q's domain is [0,1]
    const double ca = std::min(1.0, coa_2q(rho));
    return TeoaBound{f_q(ca, q), q.in_monogamy_set()};
}

double eof_limit(const DensityMatrix& rho) {
    return f_q(concurrence_2q(rho), QParam(1.0));
}

RoofResult convex_roof(const DensityMatrix& rho, const std::vector<int>& first_group,
                       const QParam& q, RoofMode mode, const RoofOptions& opts) {
    return RoofSearch(rho, first_group, q, mode, opts).run();
}

}  // namespace tqe

#include "tqe/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tqe {

namespace {

void require_qubits(const PureState& psi) {
    for (int d : psi.dims())
        if (d != 2) throw Error("NotQubits", "inequality is stated for qubit systems");
}

void require_parties(const PureState& psi, int min_parties) {
    if (psi.n_subsystems() < min_parties)
        throw Error("TooFewParties", "need at least " + std::to_string(min_parties) +
                                         " subsystems");
}

int check_focus(const PureState& psi, int focus) {
    if (focus < 0 || focus >= psi.n_subsystems())
        throw Error("IndexOutOfRange", "focus index " + std::to_string(focus));
    return focus;
}

// Sum over parties i != focus of term(rho_{focus,i}).
template <typename Term>
double sum_over_pairs(const PureState& psi, int focus, Term&& term) {
    double sum = 0.0;
    for (int i = 0; i < psi.n_subsystems(); ++i) {
        if (i == focus) continue;
        sum += term(reduced_density(psi, {std::min(focus, i), std::max(focus, i)}));
    }
    return sum;
}

// T^a_q terms off the exact set: start from f_q(C^a) and keep the better of
// that and an ensemble-search lower bound.
double refined_teoa_lower(const DensityMatrix& rho, const QParam& q,
                          const RoofOptions& roof) {
    const double base = teoa_2q_bound(rho, q).value;
    const RoofResult r = convex_roof(rho, {0}, q, RoofMode::maximize, roof);
    return std::max(base, r.value);
}

}  // namespace

InequalityReport ckw_monogamy(const PureState& psi, int focus, const CheckOptions& opts) {
    require_qubits(psi);
    require_parties(psi, 3);
    check_focus(psi, focus);
    const double c_one_rest = pure_concurrence(psi, {focus});
    const double lhs = c_one_rest * c_one_rest;
    const double rhs = sum_over_pairs(psi, focus, [](const DensityMatrix& pair) {
        const double c = concurrence_2q(pair);
        return c * c;
    });
    return make_report("ckw", Sense::geq, 0.0, lhs, Bound::exact, rhs, Bound::exact,
                       opts.tolerance_exact, opts.state_descriptor);
}

InequalityReport dual_polygamy(const PureState& psi, int focus, const CheckOptions& opts) {
    require_qubits(psi);
    require_parties(psi, 3);
    check_focus(psi, focus);
    // the global state is pure, so its CoA across focus|rest is the pure
    // concurrence (single decomposition)
    const double c_one_rest = pure_concurrence(psi, {focus});
    const double lhs = c_one_rest * c_one_rest;
    const double rhs = sum_over_pairs(psi, focus, [](const DensityMatrix& pair) {
        const double ca = coa_2q(pair);
        return ca * ca;
    });
    return make_report("ckw-dual", Sense::leq, 0.0, lhs, Bound::exact, rhs, Bound::exact,
                       opts.tolerance_exact, opts.state_descriptor);
}

InequalityReport tsallis_monogamy(const PureState& psi, int focus, const QParam& q,
                                  const CheckOptions& opts) {
    require_qubits(psi);
    require_parties(psi, 3);
    check_focus(psi, focus);
    if (!(q.q() >= 2.0 && q.q() <= 3.0) && !opts.allow_out_of_regime)
        throw Error("QOutOfRange", "Tsallis monogamy is stated for 2 <= q <= 3");
    const double lhs = tsallis_ent_pure(psi, {focus}, q);
    const double rhs = sum_over_pairs(
        psi, focus, [&](const DensityMatrix& pair) { return tsallis_ent_2q(pair, q); });
    return make_report("tsallis-monogamy", Sense::geq, q.q(), lhs, Bound::exact, rhs,
                       Bound::exact, opts.tolerance_exact, opts.state_descriptor);
}

InequalityReport tsallis_polygamy(const PureState& psi, int focus, const QParam& q,
                                  const CheckOptions& opts) {
    require_qubits(psi);
    require_parties(psi, 3);
    check_focus(psi, focus);
    if (!q.in_polygamy_range() && !opts.allow_out_of_regime)
        throw Error("QOutOfRange", "Tsallis polygamy is stated for 1 <= q <= 2 or 3 <= q <= 4");

    const double lhs = tsallis_ent_pure(psi, {focus}, q);  // pure global: TEoA is exact
    const bool exact = q.in_monogamy_set();
    double rhs = sum_over_pairs(psi, focus, [&](const DensityMatrix& pair) {
        return teoa_2q_bound(pair, q).value;
    });
    double tol = exact ? opts.tolerance_exact : opts.tolerance_opt;
    if (!exact && rhs - lhs < -tol) {
        // lower-bound RHS fails to certify; refine each term by ensemble search
        rhs = sum_over_pairs(psi, focus, [&](const DensityMatrix& pair) {
            return refined_teoa_lower(pair, q, opts.roof);
        });
    }
    return make_report("tsallis-polygamy", Sense::leq, q.q(), lhs, Bound::exact, rhs,
                       exact ? Bound::exact : Bound::lower, tol, opts.state_descriptor);
}

InequalityReport gen_monogamy_thm1(const PureState& psi, const QParam& q,
                                   const CheckOptions& opts) {
    require_qubits(psi);
    require_parties(psi, 3);
    if (!q.in_monogamy_set() && !opts.allow_out_of_regime)
        throw Error("QNotInMonogamySet", "generalized monogamy is stated for q = 2 or 3");
    const bool exact = q.in_monogamy_set();
    const double lhs = tsallis_ent_pure(psi, {0, 1}, q);
    double rhs = 0.0;
    for (int i = 2; i < psi.n_subsystems(); ++i) {
        rhs += tsallis_ent_2q(reduced_density(psi, {0, i}), q);
        rhs -= teoa_2q_bound(reduced_density(psi, {1, i}), q).value;  // exact at q = 2, 3
    }
    // off the exact set the subtracted TEoA terms are lower bounds, so the
    // assembled RHS can only overshoot
    return make_report("gen-monogamy", Sense::geq, q.q(), lhs, Bound::exact, rhs,
                       exact ? Bound::exact : Bound::upper, opts.tolerance_exact,
                       opts.state_descriptor);
}

namespace {

void check_three_groups(const std::vector<int>& a, const std::vector<int>& b, int m) {
    std::vector<int> seen(m, 0);
    for (int s : a) {
        if (s < 0 || s >= m) throw Error("BadPartition", "group index out of range");
        ++seen[s];
    }
    for (int s : b) {
        if (s < 0 || s >= m) throw Error("BadPartition", "group index out of range");
        ++seen[s];
    }
    int used = 0;
    for (int c : seen) {
        if (c > 1) throw Error("BadPartition", "groups overlap");
        used += c;
    }
    if (a.empty() || b.empty() || used >= m)
        throw Error("BadPartition", "need three nonempty disjoint groups");
}

}  // namespace

InequalityReport teoa_reciprocity_thm2(const PureState& psi,
                                       const std::vector<int>& group_a,
                                       const std::vector<int>& group_b,
                                       const QParam& q, const CheckOptions& opts) {
    if (q.q() < 1.0 && !opts.allow_out_of_regime)
        throw Error("QOutOfRange", "reciprocity is stated for q >= 1");
    check_three_groups(group_a, group_b, psi.n_subsystems());
    // pure global state: every TEoA equals the marginal entropy of its group
    std::vector<int> ab = group_a;
    ab.insert(ab.end(), group_b.begin(), group_b.end());
    const std::vector<int> group_c = complement_indices(ab, psi.n_subsystems());
    const double lhs = tsallis_entropy(reduced_density(psi, group_a), q);
    const double rhs = tsallis_entropy(reduced_density(psi, group_b), q) +
                       tsallis_entropy(reduced_density(psi, group_c), q);
    return make_report("teoa-reciprocity", Sense::leq, q.q(), lhs, Bound::exact, rhs,
                       Bound::exact, opts.tolerance_exact, opts.state_descriptor);
}

InequalityReport teoa_reciprocity_thm2(const DensityMatrix& rho,
                                       const std::vector<int>& group_a,
                                       const std::vector<int>& group_b,
                                       const QParam& q, const CheckOptions& opts) {
    if (q.q() < 1.0 && !opts.allow_out_of_regime)
        throw Error("QOutOfRange", "reciprocity is stated for q >= 1");
    check_three_groups(group_a, group_b, static_cast<int>(rho.dims().size()));
    std::vector<int> ab = group_a;
    ab.insert(ab.end(), group_b.begin(), group_b.end());
    const std::vector<int> group_c =
        complement_indices(ab, static_cast<int>(rho.dims().size()));

    // LHS sweep over ensemble sizes: stable converged values across k are the
    // evidence that the search reached the maximum.
    RoofOptions sweep = opts.roof;
    double lhs = 0.0;
    double lhs_min = std::numeric_limits<double>::infinity();
    bool evidence = true;
    const RoofResult probe = convex_roof(rho, group_a, q, RoofMode::maximize, opts.roof);
    const int k0 = probe.ensemble_size;
    for (int k = k0; k <= std::min(k0 + 2, opts.roof.max_ensemble); ++k) {
        sweep.ensemble_size = k;
        const RoofResult r = convex_roof(rho, group_a, q, RoofMode::maximize, sweep);
        lhs = std::max(lhs, r.value);
        lhs_min = std::min(lhs_min, r.value);
        evidence = evidence && r.converged;
    }
    evidence = evidence && (lhs - lhs_min <= opts.tolerance_opt);

    const double rhs = convex_roof(rho, group_b, q, RoofMode::maximize, opts.roof).value +
                       convex_roof(rho, group_c, q, RoofMode::maximize, opts.roof).value;
    return make_report("teoa-reciprocity", Sense::leq, q.q(), lhs,
                       evidence ? Bound::exact : Bound::lower, rhs, Bound::lower,
                       opts.tolerance_opt, opts.state_descriptor);
}

InequalityReport teoa_multiparty_cor1(const PureState& psi, int focus, const QParam& q,
                                      const CheckOptions& opts) {
    if (q.q() < 1.0 && !opts.allow_out_of_regime)
        throw Error("QOutOfRange", "multi-party bound is stated for q >= 1");
    require_parties(psi, 2);
    check_focus(psi, focus);
    // pure global state: T^a_q(A_i | rest) = S_q(rho_{A_i})
    const double lhs = tsallis_entropy(reduced_density(psi, {focus}), q);
    double rhs = 0.0;
    for (int i = 0; i < psi.n_subsystems(); ++i) {
        if (i == focus) continue;
        rhs += tsallis_entropy(reduced_density(psi, {i}), q);
    }
    return make_report("teoa-multiparty", Sense::leq, q.q(), lhs, Bound::exact, rhs,
                       Bound::exact, opts.tolerance_exact, opts.state_descriptor);
}

InequalityReport gen_polygamy_cor2(const PureState& psi, const QParam& q,
                                   const CheckOptions& opts) {
    require_qubits(psi);
    require_parties(psi, 3);
    if (!q.in_polygamy_range() && !opts.allow_out_of_regime)
        throw Error("QOutOfRange", "generalized polygamy is stated for 1 <= q <= 2 or 3 <= q <= 4");

    const double lhs = tsallis_ent_pure(psi, {0, 1}, q);  // pure global: exact TEoA
    const bool exact = q.in_monogamy_set();

    const auto rhs_terms = [&](auto&& teoa_term) {
        double rhs = 2.0 * teoa_term(reduced_density(psi, {0, 1}));
        for (int i = 2; i < psi.n_subsystems(); ++i) {
            rhs += teoa_term(reduced_density(psi, {0, i}));
            rhs += teoa_term(reduced_density(psi, {1, i}));
        }
        return rhs;
    };

    double rhs = rhs_terms(
        [&](const DensityMatrix& pair) { return teoa_2q_bound(pair, q).value; });
    const double tol = exact ? opts.tolerance_exact : opts.tolerance_opt;
    if (!exact && rhs - lhs < -tol) {
        rhs = rhs_terms([&](const DensityMatrix& pair) {
            return refined_teoa_lower(pair, q, opts.roof);
        });
    }
    return make_report("gen-polygamy", Sense::leq, q.q(), lhs, Bound::exact, rhs,
                       exact ? Bound::exact : Bound::lower, tol, opts.state_descriptor);
}

}  // namespace tqe

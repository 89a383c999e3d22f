#include "tqe/report.hpp"

#include <cmath>

namespace tqe {

namespace {

// The reported slack is a lower bound on the true slack when the lhs/rhs
// bounds err on the failing side, an upper bound when they err on the
// holding side. Equality checks certify only with exact operands.
bool slack_is_lower_bound(Sense sense, Bound lhs, Bound rhs) {
    switch (sense) {
        case Sense::leq:  // slack = rhs - lhs
            return (lhs == Bound::exact || lhs == Bound::upper) &&
                   (rhs == Bound::exact || rhs == Bound::lower);
        case Sense::geq:  // slack = lhs - rhs
            return (lhs == Bound::exact || lhs == Bound::lower) &&
                   (rhs == Bound::exact || rhs == Bound::upper);
        case Sense::eq:
            return lhs == Bound::exact && rhs == Bound::exact;
    }
    return false;
}

bool slack_is_upper_bound(Sense sense, Bound lhs, Bound rhs) {
    switch (sense) {
        case Sense::leq:
            return (lhs == Bound::exact || lhs == Bound::lower) &&
                   (rhs == Bound::exact || rhs == Bound::upper);
        case Sense::geq:
            return (lhs == Bound::exact || lhs == Bound::upper) &&
                   (rhs == Bound::exact || rhs == Bound::lower);
        case Sense::eq:
            return lhs == Bound::exact && rhs == Bound::exact;
    }
    return false;
}

}  // namespace

InequalityReport make_report(std::string name, Sense sense, double q, double lhs,
                             Bound lhs_bound, double rhs, Bound rhs_bound,
                             double tolerance, std::string state_descriptor) {
    InequalityReport r;
    r.name = std::move(name);
    r.q = q;
    r.lhs = lhs;
    r.rhs = rhs;
    r.lhs_bound = lhs_bound;
    r.rhs_bound = rhs_bound;
    r.tolerance = tolerance;
    r.state_descriptor = std::move(state_descriptor);

    switch (sense) {
        case Sense::leq: r.slack = rhs - lhs; break;
        case Sense::geq: r.slack = lhs - rhs; break;
        case Sense::eq: r.slack = -std::abs(lhs - rhs); break;
    }

    if (r.slack >= -tolerance && slack_is_lower_bound(sense, lhs_bound, rhs_bound))
        r.verdict = Verdict::holds;
    else if (r.slack < -tolerance && slack_is_upper_bound(sense, lhs_bound, rhs_bound))
        r.verdict = Verdict::violated;
    else
        r.verdict = Verdict::indeterminate;
    return r;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "HOLDS";
        case Verdict::violated: return "VIOLATED";
        case Verdict::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

const char* to_string(Bound b) {
    switch (b) {
        case Bound::exact: return "exact";
        case Bound::upper: return "upper";
        case Bound::lower: return "lower";
    }
    return "?";
}

}  // namespace tqe

#pragma once

#include <string>

namespace tqe {

enum class Verdict { holds, violated, indeterminate };
enum class Bound { exact, upper, lower };

/// Relation being reported: lhs <= rhs, lhs >= rhs, or lhs == rhs.
enum class Sense { leq, geq, eq };

/// Named inequality instance. Slack follows the convention slack >= 0 means
/// the relation holds: slack = rhs - lhs for <=, lhs - rhs for >=, and
/// -|lhs - rhs| for equality checks.
struct InequalityReport {
    std::string name;
    double q = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::indeterminate;
    Bound lhs_bound = Bound::exact;
    Bound rhs_bound = Bound::exact;
    double tolerance = 0.0;
    std::string state_descriptor;
};

/// Assembles slack and a verdict certified by the operand bound directions.
/// HOLDS requires slack >= -tolerance and bounds that cannot overstate it;
/// VIOLATED requires slack < -tolerance and bounds that cannot understate it;
/// anything else is INDETERMINATE.
InequalityReport make_report(std::string name, Sense sense, double q, double lhs,
                             Bound lhs_bound, double rhs, Bound rhs_bound,
                             double tolerance, std::string state_descriptor = {});

const char* to_string(Verdict v);
const char* to_string(Bound b);

}  // namespace tqe

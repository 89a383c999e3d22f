#pragma once

#include "tqe/entropy.hpp"
#include "tqe/inequalities.hpp"
#include "tqe/state_io.hpp"

#include <iosfwd>

namespace tqe {

enum class OutputFormat { csv, json };

/// One Monte Carlo campaign: named inequalities evaluated on seeded random
/// states at each configured q. Rejected at parse time if any q falls outside
/// an inequality's regime (unless explore is set).
struct CampaignConfig {
    std::vector<std::string> inequalities;
    int n_qubits = 3;
    long samples = 1000;
    std::vector<double> q_values;
    std::uint64_t master_seed = 1;
    double tolerance_exact = 1e-9;
    double tolerance_opt = 1e-3;
    OutputFormat format = OutputFormat::csv;
    int workers = 1;
    int focus = 0;
    int mixed_rank = 0;  // 0 -> full rank for the entropy-level inequalities
    bool explore = false;
};

struct CampaignRow {
    std::string name;
    double q = 0.0;
    double lhs = 0.0, rhs = 0.0, slack = 0.0;
    Verdict verdict = Verdict::indeterminate;
    Bound lhs_bound = Bound::exact, rhs_bound = Bound::exact;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

struct InequalityStats {
    std::string name;
    long count = 0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    long holds = 0;
    long violations = 0;
    long indeterminates = 0;
};

struct CampaignSummary {
    std::vector<InequalityStats> per_inequality;
    long rows = 0;
    long violations = 0;
    long indeterminates = 0;
    double wall_seconds = 0.0;
    std::uint64_t master_seed = 0;
};

/// Names accepted by campaigns and `check`.
const std::vector<std::string>& known_inequalities();
bool inequality_is_q_free(const std::string& name);
bool q_in_regime(const std::string& name, double q);

/// Throws ConfigError on invalid configuration.
void validate_config(const CampaignConfig& config);
CampaignConfig parse_campaign_json(const std::string& text);

/// Runs the campaign, streaming rows (CSV with header, or a JSON document
/// with rows and summary) to `out`. Deterministic under master_seed for any
/// worker count: per-sample streams are derived by counter, and rows are
/// emitted sorted by sample index.
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out);

/// Single-state evaluation used by `check`: dispatches on inequality name and
/// state type. `groups` carries the focus/partition choice.
struct CheckRequest {
    std::string inequality;
    double q = 2.0;
    int focus = 0;
    std::vector<std::vector<int>> partition;  // used by teoa-reciprocity
    CheckOptions opts;
};
InequalityReport run_single_check(const StateVariant& state, const CheckRequest& req);

std::string csv_header();
std::string to_csv(const CampaignRow& row);
std::string report_to_json(const InequalityReport& report);
std::string summary_text(const CampaignSummary& summary);
std::string format_double(double v);  // 17 significant digits

}  // namespace tqe

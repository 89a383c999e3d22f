#include "tqe/campaign.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

namespace tqe {

namespace {

using nlohmann::json;

enum class StateKind { pure_qubits, mixed_bipartite };

struct IneqInfo {
    StateKind kind;
    bool q_free;
    int min_qubits;
    bool (*in_regime)(double);
};

const std::map<std::string, IneqInfo>& registry() {
    static const std::map<std::string, IneqInfo> reg = {
        {"ckw", {StateKind::pure_qubits, true, 3, nullptr}},
        {"ckw-dual", {StateKind::pure_qubits, true, 3, nullptr}},
        {"identity-22d", {StateKind::pure_qubits, true, 3, nullptr}},
        {"tsallis-monogamy",
         {StateKind::pure_qubits, false, 3, [](double q) { return q >= 2.0 && q <= 3.0; }}},
        {"tsallis-polygamy",
         {StateKind::pure_qubits, false, 3,
          [](double q) { return (q >= 1.0 && q <= 2.0) || (q >= 3.0 && q <= 4.0); }}},
        {"gen-monogamy",
         {StateKind::pure_qubits, false, 3, [](double q) { return q == 2.0 || q == 3.0; }}},
        {"teoa-reciprocity",
         {StateKind::pure_qubits, false, 3, [](double q) { return q >= 1.0; }}},
        {"teoa-multiparty",
         {StateKind::pure_qubits, false, 2, [](double q) { return q >= 1.0; }}},
        {"gen-polygamy",
         {StateKind::pure_qubits, false, 3,
          [](double q) { return (q >= 1.0 && q <= 2.0) || (q >= 3.0 && q <= 4.0); }}},
        {"subadditivity",
         {StateKind::mixed_bipartite, false, 2, [](double q) { return q >= 1.0; }}},
        {"triangle",
         {StateKind::mixed_bipartite, false, 2, [](double q) { return q >= 1.0; }}},
    };
    return reg;
}

const IneqInfo& info_for(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("ConfigError", "unknown inequality: " + name);
    return it->second;
}

InequalityReport dispatch_pure(const std::string& name, const PureState& psi, double q,
                               int focus, const CheckOptions& opts) {
    if (name == "ckw") return ckw_monogamy(psi, focus, opts);
    if (name == "ckw-dual") return dual_polygamy(psi, focus, opts);
    if (name == "identity-22d") {
        auto r = check_identity_22d(psi, opts.tolerance_exact);
        r.state_descriptor = opts.state_descriptor;
        return r;
    }
    if (name == "tsallis-monogamy") return tsallis_monogamy(psi, focus, QParam(q), opts);
    if (name == "tsallis-polygamy") return tsallis_polygamy(psi, focus, QParam(q), opts);
    if (name == "gen-monogamy") return gen_monogamy_thm1(psi, QParam(q), opts);
    if (name == "teoa-reciprocity")
        return teoa_reciprocity_thm2(psi, {0}, {1}, QParam(q), opts);
    if (name == "teoa-multiparty") return teoa_multiparty_cor1(psi, focus, QParam(q), opts);
    if (name == "gen-polygamy") return gen_polygamy_cor2(psi, QParam(q), opts);
    throw Error("ConfigError", "inequality " + name + " needs a pure qubit state");
}

InequalityReport dispatch_mixed(const std::string& name, const DensityMatrix& rho,
                                double q, const CheckOptions& opts) {
    if (name == "subadditivity") {
        auto r = check_subadditivity(rho, QParam(q), opts.tolerance_exact);
        r.state_descriptor = opts.state_descriptor;
        return r;
    }
    if (name == "triangle") {
        auto r = check_triangle(rho, QParam(q), opts.tolerance_exact);
        r.state_descriptor = opts.state_descriptor;
        return r;
    }
    throw Error("ConfigError", "inequality " + name + " is not defined for density-matrix input");
}

}  // namespace

const std::vector<std::string>& known_inequalities() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

bool inequality_is_q_free(const std::string& name) { return info_for(name).q_free; }

bool q_in_regime(const std::string& name, double q) {
    const IneqInfo& info = info_for(name);
    if (info.q_free) return true;
    return q > 0.0 && info.in_regime(q);
}

void validate_config(const CampaignConfig& config) {
    if (config.samples < 1) throw Error("ConfigError", "samples must be >= 1");
    if (config.workers < 1) throw Error("ConfigError", "workers must be >= 1");
    if (config.inequalities.empty()) throw Error("ConfigError", "no inequalities selected");
    if (config.n_qubits < 2) throw Error("ConfigError", "n_qubits must be >= 2");
    if (config.focus < 0 || config.focus >= config.n_qubits)
        throw Error("ConfigError", "focus index out of range");
    if (config.mixed_rank < 0 || config.mixed_rank > (1 << config.n_qubits))
        throw Error("ConfigError", "mixed_rank out of range");

    for (const auto& name : config.inequalities) {
        const IneqInfo& info = info_for(name);
        if (config.n_qubits < info.min_qubits)
            throw Error("ConfigError", name + " needs at least " +
                                           std::to_string(info.min_qubits) + " qubits");
        if (name == "identity-22d" && config.n_qubits != 3)
            throw Error("ConfigError", "identity-22d runs on exactly 3 qubits");
        if (!info.q_free) {
            if (config.q_values.empty())
                throw Error("ConfigError", name + " needs at least one q value");
            if (!config.explore)
                for (double q : config.q_values)
                    if (!q_in_regime(name, q))
                        throw Error("ConfigError",
                                    name + " regime excludes q = " + format_double(q) +
                                        " (use explore mode to evaluate anyway)");
        }
    }
}

CampaignConfig parse_campaign_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("ConfigError", std::string("config parse: ") + e.what());
    }
    CampaignConfig c;
    try {
        if (j.contains("inequalities"))
            c.inequalities = j["inequalities"].get<std::vector<std::string>>();
        if (j.contains("n_qubits")) c.n_qubits = j["n_qubits"].get<int>();
        if (j.contains("samples")) c.samples = j["samples"].get<long>();
        if (j.contains("q_values")) c.q_values = j["q_values"].get<std::vector<double>>();
        if (j.contains("master_seed")) c.master_seed = j["master_seed"].get<std::uint64_t>();
        if (j.contains("tolerance")) c.tolerance_exact = j["tolerance"].get<double>();
        if (j.contains("tolerance_opt")) c.tolerance_opt = j["tolerance_opt"].get<double>();
        if (j.contains("workers")) c.workers = j["workers"].get<int>();
        if (j.contains("focus")) c.focus = j["focus"].get<int>();
        if (j.contains("mixed_rank")) c.mixed_rank = j["mixed_rank"].get<int>();
        if (j.contains("explore")) c.explore = j["explore"].get<bool>();
        if (j.contains("format")) {
            const std::string f = j["format"].get<std::string>();
            if (f == "csv")
                c.format = OutputFormat::csv;
            else if (f == "json")
                c.format = OutputFormat::json;
            else
                throw Error("ConfigError", "format must be csv or json");
        }
    } catch (const json::exception& e) {
        throw Error("ConfigError", std::string("config field: ") + e.what());
    }
    validate_config(c);
    return c;
}

namespace {

CampaignRow row_from_report(const InequalityReport& r, bool explored,
                            std::uint64_t seed, std::uint64_t stream) {
    CampaignRow row;
    row.name = explored ? "explore:" + r.name : r.name;
    row.q = r.q;
    row.lhs = r.lhs;
    row.rhs = r.rhs;
    row.slack = r.slack;
    row.verdict = r.verdict;
    row.lhs_bound = r.lhs_bound;
    row.rhs_bound = r.rhs_bound;
    row.seed = seed;
    row.stream = stream;
    return row;
}

// Every sample owns derived sub-streams per state kind, so mixing state
// kinds in one campaign keeps rows independent of evaluation order.
std::vector<CampaignRow> rows_for_sample(const CampaignConfig& config, long sample) {
    CheckOptions opts;
    opts.tolerance_exact = config.tolerance_exact;
    opts.tolerance_opt = config.tolerance_opt;
    opts.allow_out_of_regime = config.explore;
    opts.state_descriptor =
        "haar(seed=" + std::to_string(config.master_seed) + ",stream=" + std::to_string(sample) + ")";

    const std::uint64_t sample_master = derive_stream(config.master_seed, sample);
    std::optional<PureState> pure;
    std::optional<DensityMatrix> mixed;

    std::vector<CampaignRow> rows;
    for (const auto& name : config.inequalities) {
        const IneqInfo& info = info_for(name);
        std::vector<double> qs = info.q_free ? std::vector<double>{0.0} : config.q_values;
        for (double q : qs) {
            const bool explored = !info.q_free && !q_in_regime(name, q);
            InequalityReport rep;
            if (info.kind == StateKind::pure_qubits) {
                if (!pure)
                    pure = haar_random_pure(std::vector<int>(config.n_qubits, 2),
                                            Seed{sample_master, 0});
                rep = dispatch_pure(name, *pure, q, config.focus, opts);
            } else {
                if (!mixed) {
                    const int dim = 1 << config.n_qubits;
                    const int rank = config.mixed_rank > 0 ? config.mixed_rank : dim;
                    mixed = with_dims(random_mixed(dim, rank, Seed{sample_master, 1}),
                                      {2, dim / 2});
                }
                rep = dispatch_mixed(name, *mixed, q, opts);
            }
            rows.push_back(row_from_report(rep, explored, config.master_seed,
                                           static_cast<std::uint64_t>(sample)));
        }
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_header() {
    return "name,q,lhs,rhs,slack,verdict,lhs_bound,rhs_bound,seed,stream";
}

std::string to_csv(const CampaignRow& r) {
    std::string out = r.name;
    out += ',';
    out += format_double(r.q);
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.rhs);
    out += ',';
    out += format_double(r.slack);
    out += ',';
    out += to_string(r.verdict);
    out += ',';
    out += to_string(r.lhs_bound);
    out += ',';
    out += to_string(r.rhs_bound);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.stream);
    return out;
}

namespace {

json row_to_json(const CampaignRow& r) {
    json j;
    j["name"] = r.name;
    j["q"] = r.q;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["verdict"] = to_string(r.verdict);
    j["lhs_bound"] = to_string(r.lhs_bound);
    j["rhs_bound"] = to_string(r.rhs_bound);
    j["seed"] = r.seed;
    j["stream"] = r.stream;
    return j;
}

json summary_to_json(const CampaignSummary& s) {
    json j;
    j["rows"] = s.rows;
    j["violations"] = s.violations;
    j["indeterminates"] = s.indeterminates;
    j["wall_seconds"] = s.wall_seconds;
    j["master_seed"] = s.master_seed;
    json per = json::array();
    for (const auto& st : s.per_inequality) {
        json e;
        e["name"] = st.name;
        e["count"] = st.count;
        e["min_slack"] = st.min_slack;
        e["mean_slack"] = st.mean_slack;
        e["holds"] = st.holds;
        e["violations"] = st.violations;
        e["indeterminates"] = st.indeterminates;
        per.push_back(e);
    }
    j["per_inequality"] = per;
    return j;
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out) {
    validate_config(config);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::vector<CampaignRow>> results(config.samples);
    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const long i = next.fetch_add(1);
            if (i >= config.samples) break;
            try {
                results[i] = rows_for_sample(config, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed = true;
            }
        }
    };

    if (config.workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < config.workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    CampaignSummary summary;
    summary.master_seed = config.master_seed;
    std::map<std::string, InequalityStats> stats;
    for (const auto& rows : results)
        for (const auto& r : rows) {
            auto& st = stats[r.name];
            if (st.count == 0) {
                st.name = r.name;
                st.min_slack = std::numeric_limits<double>::infinity();
            }
            ++st.count;
            st.min_slack = std::min(st.min_slack, r.slack);
            st.mean_slack += r.slack;
            switch (r.verdict) {
                case Verdict::holds: ++st.holds; break;
                case Verdict::violated: ++st.violations; break;
                case Verdict::indeterminate: ++st.indeterminates; break;
            }
            ++summary.rows;
        }
    for (auto& [_, st] : stats) {
        st.mean_slack /= static_cast<double>(st.count);
        summary.violations += st.violations;
        summary.indeterminates += st.indeterminates;
        summary.per_inequality.push_back(st);
    }
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (config.format == OutputFormat::csv) {
        out << csv_header() << '\n';
        for (const auto& rows : results)
            for (const auto& r : rows) out << to_csv(r) << '\n';
    } else {
        json doc;
        json jrows = json::array();
        for (const auto& rows : results)
            for (const auto& r : rows) jrows.push_back(row_to_json(r));
        doc["rows"] = jrows;
        doc["summary"] = summary_to_json(summary);
        out << doc.dump(2) << '\n';
    }
    return summary;
}

InequalityReport run_single_check(const StateVariant& state, const CheckRequest& req) {
    const IneqInfo& info = info_for(req.inequality);
    if (!info.q_free && !req.opts.allow_out_of_regime &&
        !q_in_regime(req.inequality, req.q))
        throw Error("QOutOfRange", req.inequality + " regime excludes q = " +
                                       format_double(req.q));

    if (std::holds_alternative<PureState>(state)) {
        const PureState& psi = std::get<PureState>(state);
        if (req.inequality == "teoa-reciprocity" && req.partition.size() == 3)
            return teoa_reciprocity_thm2(psi, req.partition[0], req.partition[1],
                                         QParam(req.q), req.opts);
        if (info.kind == StateKind::mixed_bipartite) {
            // entropy-level checks see the projector, regrouped to two factors
            if (req.partition.size() == 2) {
                std::vector<int> perm = req.partition[0];
                perm.insert(perm.end(), req.partition[1].begin(), req.partition[1].end());
                const PureState grouped = permute_subsystems(psi, perm);
                long da = 1;
                for (size_t i = 0; i < req.partition[0].size(); ++i) da *= grouped.dims()[i];
                return dispatch_mixed(
                    req.inequality,
                    with_dims(density(grouped), {static_cast<int>(da),
                                                 static_cast<int>(grouped.dim() / da)}),
                    req.q, req.opts);
            }
            return dispatch_mixed(req.inequality, density(psi), req.q, req.opts);
        }
        return dispatch_pure(req.inequality, psi, req.q, req.focus, req.opts);
    }

    const DensityMatrix& rho = std::get<DensityMatrix>(state);
    if (req.inequality == "teoa-reciprocity") {
        if (req.partition.size() != 3)
            throw Error("BadPartition", "teoa-reciprocity on a density matrix needs --partition a|b|c");
        return teoa_reciprocity_thm2(rho, req.partition[0], req.partition[1],
                                     QParam(req.q), req.opts);
    }
    return dispatch_mixed(req.inequality, rho, req.q, req.opts);
}

std::string report_to_json(const InequalityReport& r) {
    json j;
    j["name"] = r.name;
    j["q"] = r.q;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["verdict"] = to_string(r.verdict);
    j["lhs_bound"] = to_string(r.lhs_bound);
    j["rhs_bound"] = to_string(r.rhs_bound);
    j["tolerance"] = r.tolerance;
    j["state"] = r.state_descriptor;
    return j.dump(2);
}

std::string summary_text(const CampaignSummary& s) {
    std::string out;
    out += "campaign summary (seed " + std::to_string(s.master_seed) + ", " +
           format_double(s.wall_seconds) + " s)\n";
    for (const auto& st : s.per_inequality) {
        out += "  " + st.name + ": count " + std::to_string(st.count) + ", min slack " +
               format_double(st.min_slack) + ", mean slack " + format_double(st.mean_slack) +
               ", holds " + std::to_string(st.holds) + ", violated " +
               std::to_string(st.violations) + ", indeterminate " +
               std::to_string(st.indeterminates) + "\n";
    }
    out += "  total rows " + std::to_string(s.rows) + ", violations " +
           std::to_string(s.violations) + ", indeterminates " +
           std::to_string(s.indeterminates) + "\n";
    return out;
}

}  // namespace tqe

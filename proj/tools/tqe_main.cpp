// tqe: Tsallis-q entanglement monogamy toolkit.
//
// Subcommands:
//   demo    named states (ghz, w, werner) with their measures and reports
//   check   one inequality on a state file, JSON report on stdout
//   sample  seeded Monte Carlo campaigns over random states
//   scan-q  slack (or f_q additivity gap) across a q grid
//
// Exit codes: 0 HOLDS, 2 VIOLATED, 3 INDETERMINATE, 1 usage/parse error.

#include <CLI11.hpp>

#include "tqe/campaign.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace tqe;

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::holds: return 0;
        case Verdict::violated: return 2;
        case Verdict::indeterminate: return 3;
    }
    return 1;
}

std::vector<std::vector<int>> parse_partition(const std::string& text) {
    std::vector<std::vector<int>> groups;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, '|')) {
        std::vector<int> g;
        std::stringstream gs(group);
        std::string idx;
        while (std::getline(gs, idx, ','))
            if (!idx.empty()) g.push_back(std::stoi(idx));
        groups.push_back(std::move(g));
    }
    return groups;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw Error("IOError", "cannot open " + path + " for writing");
    return file;
}

CampaignRow demo_row(const InequalityReport& r) {
    CampaignRow row;
    row.name = r.name;
    row.q = r.q;
    row.lhs = r.lhs;
    row.rhs = r.rhs;
    row.slack = r.slack;
    row.verdict = r.verdict;
    row.lhs_bound = r.lhs_bound;
    row.rhs_bound = r.rhs_bound;
    return row;
}

int run_demo(const std::string& name, int n, double p, const std::vector<double>& extra_q) {
    std::set<double> qs = {2.0, 3.0};
    qs.insert(extra_q.begin(), extra_q.end());

    std::cout << csv_header() << '\n';
    bool any_violated = false, any_indet = false;
    auto emit = [&](const InequalityReport& r) {
        std::cout << to_csv(demo_row(r)) << '\n';
        any_violated |= r.verdict == Verdict::violated;
        any_indet |= r.verdict == Verdict::indeterminate;
    };

    if (name == "werner") {
        const DensityMatrix rho = werner(p);
        std::cout << "# state: werner(p=" << format_double(p) << ")\n";
        std::cout << "# C = " << format_double(concurrence_2q(rho)) << '\n';
        std::cout << "# Ca = " << format_double(coa_2q(rho)) << '\n';
        std::cout << "# EoF = " << format_double(eof_limit(rho)) << '\n';
        for (double q : qs) {
            if (q >= 1.0 && q <= 4.0) {
                std::cout << "# T_" << format_double(q) << " = "
                          << format_double(tsallis_ent_2q(rho, QParam(q))) << '\n';
                std::cout << "# Ta_" << format_double(q) << " >= "
                          << format_double(teoa_2q_bound(rho, QParam(q)).value) << '\n';
            }
            if (q >= 1.0) {
                emit(check_subadditivity(rho, QParam(q)));
                emit(check_triangle(rho, QParam(q)));
            }
        }
        return any_violated ? 2 : (any_indet ? 3 : 0);
    }

    PureState psi = name == "ghz" ? ghz(n) : w_state(n);
    std::cout << "# state: " << name << "(n=" << n << ")\n";
    std::cout << "# C(0|rest) = " << format_double(pure_concurrence(psi, {0})) << '\n';

    CheckOptions opts;
    emit(ckw_monogamy(psi, 0, opts));
    emit(dual_polygamy(psi, 0, opts));
    if (n == 3) emit(check_identity_22d(psi));
    for (double q : qs) {
        if (q_in_regime("tsallis-monogamy", q)) emit(tsallis_monogamy(psi, 0, QParam(q), opts));
        if (q_in_regime("tsallis-polygamy", q)) emit(tsallis_polygamy(psi, 0, QParam(q), opts));
        if (q_in_regime("gen-monogamy", q)) emit(gen_monogamy_thm1(psi, QParam(q), opts));
        if (q_in_regime("teoa-reciprocity", q))
            emit(teoa_reciprocity_thm2(psi, {0}, {1}, QParam(q), opts));
        if (q_in_regime("teoa-multiparty", q)) emit(teoa_multiparty_cor1(psi, 0, QParam(q), opts));
        if (q_in_regime("gen-polygamy", q)) emit(gen_polygamy_cor2(psi, QParam(q), opts));
    }
    return any_violated ? 2 : (any_indet ? 3 : 0);
}

int run_check(const std::string& path, CheckRequest& req) {
    const StateVariant state = load_state_file(path);
    if (req.opts.state_descriptor.empty()) req.opts.state_descriptor = "file:" + path;
    const InequalityReport report = run_single_check(state, req);
    std::cout << report_to_json(report) << '\n';
    return verdict_exit_code(report.verdict);
}

int run_scan_fq_gap(double q_min, double q_max, double q_step, int grid,
                    std::ostream& out) {
    if (q_step <= 0.0 || q_max < q_min) throw Error("GridError", "bad q grid");
    if (q_min < 1.0 || q_max > 4.0)
        throw Error("GridError", "f_q additivity gap is defined on 1 <= q <= 4");
    out << "q,min_gap,max_gap,points,regime\n";
    for (double q = q_min; q <= q_max + 1e-12; q += q_step) {
        const QParam qp(std::min(q, 4.0));
        const GapExtrema e = fq_gap_scan(qp, grid);
        const char* regime = "";
        switch (fq_regime(qp)) {
            case FqRegime::equality: regime = "equality"; break;
            case FqRegime::superadditive: regime = "superadditive"; break;
            case FqRegime::subadditive: regime = "subadditive"; break;
        }
        out << format_double(qp.q()) << ',' << format_double(e.min_gap) << ','
            << format_double(e.max_gap) << ',' << e.points << ',' << regime << '\n';
    }
    return 0;
}

int run_scan_state(const StateVariant& state, CheckRequest req, double q_min,
                   double q_max, double q_step, bool explore, std::ostream& out) {
    if (q_step <= 0.0 || q_max < q_min) throw Error("GridError", "bad q grid");
    if (!explore)
        for (double q = q_min; q <= q_max + 1e-12; q += q_step)
            if (!q_in_regime(req.inequality, q))
                throw Error("GridError", req.inequality + " regime excludes q = " +
                                             format_double(q) +
                                             " (use --explore to evaluate anyway)");
    out << csv_header() << '\n';
    bool any_violated = false;
    req.opts.allow_out_of_regime = explore;
    for (double q = q_min; q <= q_max + 1e-12; q += q_step) {
        req.q = q;
        const InequalityReport r = run_single_check(state, req);
        CampaignRow row = demo_row(r);
        if (explore && !q_in_regime(req.inequality, q)) row.name = "explore:" + row.name;
        out << to_csv(row) << '\n';
        any_violated |= r.verdict == Verdict::violated;
    }
    return any_violated ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tsallis-q entanglement monogamy toolkit"};
    app.require_subcommand(1);

    // demo
    auto* demo = app.add_subcommand("demo", "reports for a named state");
    std::string demo_name;
    int demo_n = 3;
    double demo_p = 1.0;
    std::vector<double> demo_q;
    demo->add_option("name", demo_name, "ghz | w | werner")->required();
    demo->add_option("--n", demo_n, "number of qubits");
    demo->add_option("--p", demo_p, "werner mixing weight");
    demo->add_option("--q", demo_q, "extra q values beyond {2,3}");

    // check
    auto* check = app.add_subcommand("check", "one inequality on a state file");
    std::string check_file, check_ineq, check_partition;
    double check_q = 2.0;
    int check_focus = 0;
    double check_tol = -1.0;
    bool check_explore = false;
    check->add_option("state", check_file, "state JSON file")->required();
    check->add_option("--ineq", check_ineq, "inequality name")->required();
    check->add_option("--q", check_q, "entropic index");
    check->add_option("--focus", check_focus, "focus subsystem index");
    check->add_option("--partition", check_partition, "groups, e.g. 0|1|2,3");
    check->add_option("--tolerance", check_tol, "override exact-path tolerance");
    check->add_flag("--explore", check_explore, "allow out-of-regime q");

    // sample
    auto* sample = app.add_subcommand("sample", "Monte Carlo campaign");
    std::string sample_config, sample_out, sample_format = "csv";
    CampaignConfig config;
    std::vector<std::string> sample_ineqs;
    std::vector<double> sample_q;
    sample->add_option("--config", sample_config, "campaign config JSON file");
    sample->add_option("--ineq", sample_ineqs, "inequality names");
    sample->add_option("--n", config.n_qubits, "number of qubits");
    sample->add_option("--samples", config.samples, "number of random states");
    sample->add_option("--q", sample_q, "q values");
    sample->add_option("--seed", config.master_seed, "master seed");
    sample->add_option("--out", sample_out, "output path (default stdout)");
    sample->add_option("--format", sample_format, "csv | json");
    sample->add_option("--workers", config.workers, "worker threads");
    sample->add_option("--tolerance", config.tolerance_exact, "exact-path tolerance");
    sample->add_option("--focus", config.focus, "focus subsystem index");
    sample->add_option("--rank", config.mixed_rank, "rank for mixed-state campaigns");
    sample->add_flag("--explore", config.explore, "allow out-of-regime q (labeled rows)");

    // scan-q
    auto* scan = app.add_subcommand("scan-q", "slack or gap across a q grid");
    std::string scan_ineq, scan_state, scan_demo, scan_partition, scan_out;
    double scan_qmin = 2.0, scan_qmax = 3.0, scan_qstep = 0.1;
    int scan_grid = 101, scan_n = 3, scan_focus = 0;
    double scan_p = 1.0;
    bool scan_explore = false;
    scan->add_option("--ineq", scan_ineq, "inequality name or fq-gap")->required();
    scan->add_option("--q-min", scan_qmin, "grid start");
    scan->add_option("--q-max", scan_qmax, "grid end");
    scan->add_option("--q-step", scan_qstep, "grid step");
    scan->add_option("--grid", scan_grid, "(x,y) grid points per axis for fq-gap");
    scan->add_option("--state", scan_state, "state JSON file");
    scan->add_option("--demo", scan_demo, "named state: ghz | w | werner");
    scan->add_option("--n", scan_n, "qubits for --demo");
    scan->add_option("--p", scan_p, "werner weight for --demo");
    scan->add_option("--focus", scan_focus, "focus subsystem index");
    scan->add_option("--partition", scan_partition, "groups for teoa-reciprocity");
    scan->add_option("--out", scan_out, "output path (default stdout)");
    scan->add_flag("--explore", scan_explore, "allow out-of-regime q (labeled rows)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (demo->parsed()) {
            if (demo_name != "ghz" && demo_name != "w" && demo_name != "werner")
                throw Error("UnknownState", "demo knows ghz, w, werner");
            return run_demo(demo_name, demo_n, demo_p, demo_q);
        }

        if (check->parsed()) {
            CheckRequest req;
            req.inequality = check_ineq;
            req.q = check_q;
            req.focus = check_focus;
            if (!check_partition.empty()) req.partition = parse_partition(check_partition);
            if (check_tol > 0.0) req.opts.tolerance_exact = check_tol;
            req.opts.allow_out_of_regime = check_explore;
            return run_check(check_file, req);
        }

        if (sample->parsed()) {
            if (!sample_config.empty()) {
                std::ifstream in(sample_config);
                if (!in) throw Error("IOError", "cannot open " + sample_config);
                std::ostringstream ss;
                ss << in.rdbuf();
                config = parse_campaign_json(ss.str());
            } else {
                config.inequalities = sample_ineqs;
                config.q_values = sample_q;
                if (sample_format == "json")
                    config.format = OutputFormat::json;
                else if (sample_format != "csv")
                    throw Error("ConfigError", "format must be csv or json");
                validate_config(config);
            }
            if (config.explore)
                std::cerr << "warning: explore mode evaluates q outside proven regimes; "
                             "rows are labeled explore:*\n";
            std::ofstream file;
            std::ostream& out = open_output(sample_out, file);
            const CampaignSummary summary = run_campaign(config, out);
            std::cerr << summary_text(summary);
            return summary.violations > 0 ? 2 : 0;
        }

        if (scan->parsed()) {
            std::ofstream file;
            std::ostream& out = open_output(scan_out, file);
            if (scan_ineq == "fq-gap")
                return run_scan_fq_gap(scan_qmin, scan_qmax, scan_qstep, scan_grid, out);

            StateVariant state = [&]() -> StateVariant {
                if (!scan_state.empty()) return load_state_file(scan_state);
                if (scan_demo == "ghz") return ghz(scan_n);
                if (scan_demo == "w") return w_state(scan_n);
                if (scan_demo == "werner") return werner(scan_p);
                throw Error("UnknownState", "need --state FILE or --demo ghz|w|werner");
            }();
            CheckRequest req;
            req.inequality = scan_ineq;
            req.focus = scan_focus;
            if (!scan_partition.empty()) req.partition = parse_partition(scan_partition);
            return run_scan_state(state, req, scan_qmin, scan_qmax, scan_qstep,
                                  scan_explore, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

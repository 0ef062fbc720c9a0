#include "frc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"

#include "frc/analysis.hpp"
#include "frc/code_io.hpp"
#include "frc/constructions.hpp"
#include "frc/error.hpp"
#include "frc/repair.hpp"
#include "frc/report_json.hpp"
#include "frc/sweep.hpp"

namespace frc {

namespace {

using json::Json;

std::string node_label(std::size_t i) { return "U" + std::to_string(i + 1); }
std::string packet_label(std::size_t j) { return "P" + std::to_string(j + 1); }

std::string node_list(const std::vector<std::size_t>& nodes) {
    std::string s;
    for (auto i : nodes) s += (s.empty() ? "" : " ") + node_label(i);
    return s.empty() ? "-" : s;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct GlobalOptions {
    bool json = false;
    unsigned workers = 1;
    EnumerationOptions enumeration() const {
        EnumerationOptions opts;
        opts.workers = workers;
        if (const char* env = std::getenv("FRC_BUDGET")) {
            try {
                std::size_t used = 0;
                opts.budget = std::stoull(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError,
                            "FRC_BUDGET must be an unsigned integer, got '" + std::string(env) +
                                "'");
            }
        }
        return opts;
    }
};

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    f << text;
}

// Accepts a 0-based index ("6") or a 1-based display label ("U7").
std::size_t parse_node(const std::string& text, std::size_t n) {
    std::string digits = text;
    bool one_based = false;
    if (!digits.empty() && (digits[0] == 'U' || digits[0] == 'u')) {
        digits.erase(0, 1);
        one_based = true;
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw Error(ErrorKind::ParseError, "bad node '" + text + "', expected an index or U<label>");
    std::size_t value = std::stoull(digits);
    if (one_based) {
        if (value == 0) throw Error(ErrorKind::ParseError, "node labels start at U1");
        --value;
    }
    if (value >= n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "node " + text + " outside a system of " + std::to_string(n) + " nodes");
    return value;
}

// --- generate -------------------------------------------------------------

void emit_generated(const FrCode& code, const std::string& output, const GlobalOptions& g,
                    std::ostream& out) {
    if (output.empty()) {
        out << format_code(code, CodeFormat::Json);
        return;
    }
    export_code(code, output);
    if (g.json) {
        Json j;
        j["path"] = output;
        j["n"] = code.n();
        j["theta"] = code.theta();
        out << j.dump() << '\n';
    } else {
        out << "wrote " << output << ": n=" << code.n() << " theta=" << code.theta() << '\n';
    }
}

// --- analyze --------------------------------------------------------------

int cmd_analyze(const std::string& path, std::size_t file_size_arg, const GlobalOptions& g,
                std::ostream& out) {
    const auto code = import_code(path);
    const auto opts = g.enumeration();
    const auto p = profile(code);
    const auto ids = check_identities(code);
    const std::size_t file_size = file_size_arg ? file_size_arg : default_file_size(code);
    const std::size_t k = reconstruction_degree(code, file_size, opts);
    const auto coverage = coverage_profile(code, k, opts);

    Json j;
    j["n"] = code.n();
    j["theta"] = code.theta();
    j["profile"] = json::to_json(p);
    j["identity"] = json::to_json(ids);
    j["file_size"] = file_size;
    j["reconstruction_degree"] = k;
    j["coverage"] = json::to_json(coverage);
    if (g.json) {
        out << j.dump() << '\n';
        return kExitOk;
    }

    out << "n=" << code.n() << " theta=" << code.theta() << " alpha=" << p.alpha
        << " rho=" << p.rho << " k=" << k << '\n';
    out << "storage:";
    for (std::size_t i = 0; i < code.n(); ++i)
        out << ' ' << node_label(i) << '=' << p.alpha_per_node[i];
    out << '\n';
    out << "storage " << (p.is_uniform_storage ? "uniform" : "non-uniform") << ", replication "
        << (p.is_regular_replication ? "regular" : "irregular") << '\n';
    out << "identity: " << to_string(ids.classification) << " (n*alpha=" << ids.n_alpha
        << ", rho*theta=" << ids.rho_theta << ")\n";
    out << "file size M=" << file_size << ", reconstruction degree k=" << k << '\n';
    out << std::setw(4) << "k" << std::setw(7) << "M(k)" << "  witness\n";
    for (const auto& c : coverage.per_k)
        out << std::setw(4) << c.k << std::setw(7) << c.value << "  " << node_list(c.witness)
            << '\n';
    return kExitOk;
}

// --- goodness -------------------------------------------------------------

void print_goodness(const GoodnessReport& r, std::ostream& out) {
    out << "k=" << r.k << " alpha=" << r.alpha << " theta=" << r.theta << " M=" << r.file_size
        << " rhs=" << r.rhs << " margin=" << r.margin << ' ' << verdict(r.passed) << '\n';
}

int cmd_goodness(const std::string& path, bool weak, bool structural, std::size_t file_size_arg,
                 const GlobalOptions& g, std::ostream& out) {
    const auto code = import_code(path);
    const auto opts = g.enumeration();
    const auto p = profile(code);
    const std::size_t file_size = file_size_arg ? file_size_arg : default_file_size(code);
    const std::size_t k = reconstruction_degree(code, file_size, opts);
    const auto arithmetic = goodness_arithmetic(k, p.alpha, code.theta(), weak, file_size);
    bool passed = arithmetic.passed;

    Json j;
    j["arithmetic"] = json::to_json(arithmetic);
    std::optional<StructuralReport> report;
    if (structural) {
        report = goodness_structural(code, opts);
        passed = passed && report->passed();
        j["structural"] = json::to_json(*report);
    }
    j["passed"] = passed;

    if (g.json) {
        out << j.dump() << '\n';
    } else {
        out << "at reconstruction degree (" << (weak ? "weak" : "strict") << "): ";
        print_goodness(arithmetic, out);
        if (report) {
            out << "for every k <= alpha (" << (report->weak ? "weak" : "strict") << "):\n";
            for (const auto& r : report->per_k) {
                out << "  ";
                print_goodness(r, out);
            }
        }
        out << "verdict: " << verdict(passed) << '\n';
    }
    return passed ? kExitOk : kExitCheckFailed;
}

// --- repair ---------------------------------------------------------------

int cmd_repair(const std::string& path, const std::string& failed_text, const GlobalOptions& g,
               std::ostream& out) {
    const auto code = import_code(path);
    const std::size_t failed = parse_node(failed_text, code.n());
    const auto budget = g.enumeration().budget;
    const auto plan = plan_repair(code, failed, budget);
    const auto baseline = plan_repair_first_replica(code, failed);

    if (g.json) {
        Json j;
        j["plan"] = json::to_json(plan);
        j["first_replica"] = json::to_json(baseline);
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "failed node " << node_label(failed) << " (" << plan.assignments.size()
        << " packets)\n";
    out << "packet  helper\n";
    for (const auto& a : plan.assignments)
        out << std::left << std::setw(8) << packet_label(a.packet) << node_label(a.helper)
            << '\n';
    out << std::right;
    out << "helpers: " << node_list(plan.helpers) << " (repair degree " << plan.repair_degree()
        << ")\n";
    out << "bandwidth: " << plan.bandwidth() << " (beta=" << RepairPlan::beta << ")\n";
    out << "first-replica plan: " << baseline.repair_degree() << " helpers ("
        << node_list(baseline.helpers) << ")\n";
    return kExitOk;
}

// --- sweep ----------------------------------------------------------------

int cmd_sweep_ring(const std::string& n_text, const std::string& rho_text,
                   const std::string& m_text, const std::string& output, bool per_rho,
                   const GlobalOptions& g, std::ostream& out) {
    const auto rows = sweep_ring(parse_range(n_text), parse_range(rho_text),
                                 parse_range(m_text), g.enumeration());
    if (!output.empty()) {
        write_text(output, format_table(rows));
        if (per_rho) {
            const std::filesystem::path base(output);
            std::vector<std::size_t> rhos;
            for (const auto& r : rows)
                if (std::find(rhos.begin(), rhos.end(), r.rho) == rhos.end()) rhos.push_back(r.rho);
            for (auto rho : rhos) {
                auto path = base;
                path.replace_filename(base.stem().string() + ".rho" + std::to_string(rho) +
                                      base.extension().string());
                write_text(path, format_table(restrict_rho(rows, rho)));
            }
        }
    }
    if (g.json) {
        Json j = Json::array();
        for (const auto& r : rows) j.push_back(json::to_json(r));
        out << j.dump() << '\n';
    } else if (output.empty()) {
        out << format_table(rows);
    } else {
        out << rows.size() << " rows written to " << output << '\n';
    }
    return kExitOk;
}

// --- audit-table ----------------------------------------------------------

int cmd_audit(const std::string& path, const std::string& family_text,
              const std::string& filter_text, const GlobalOptions& g, std::ostream& out) {
    const auto family = parse_family(family_text);
    const auto filter = parse_rhs_filter(filter_text);
    const auto rows = read_table(path);
    const auto findings = audit_table(rows, family, filter);
    const auto failures = static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [](const auto& f) { return !f.passed(); }));

    if (g.json) {
        for (const auto& f : findings) out << json::to_json(f).dump() << '\n';
    } else {
        out << "row  n   k   d   rho theta t   ident margin rhs  pred  dup  verdict\n";
        for (const auto& f : findings) {
            const auto& r = f.row;
            out << std::left << std::setw(5) << f.index + 1 << std::setw(4) << r.n
                << std::setw(4) << r.k << std::setw(4) << r.d << std::setw(4) << r.rho
                << std::setw(6) << r.theta << std::setw(4)
                << (r.t ? std::to_string(*r.t) : "-") << std::setw(6)
                << (f.identity_ok ? "ok" : "BAD") << std::right << std::setw(6)
                << f.goodness.margin << std::setw(5) << f.goodness.rhs << "  " << std::left
                << std::setw(6)
                << (f.prediction_matches ? (*f.prediction_matches ? "ok" : "BAD") : "-")
                << std::setw(5)
                << (f.duplicate_of ? std::to_string(*f.duplicate_of + 1) : "-")
                << verdict(f.passed()) << std::right << '\n';
        }
        out << findings.size() - failures << '/' << findings.size() << " rows pass ("
            << to_string(family) << " family, rhs filter " << to_string(filter) << ")\n";
    }
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

// --- conjecture -----------------------------------------------------------

int cmd_conjecture(const std::string& n_text, const std::string& rho_text,
                   std::size_t max_multiple, const GlobalOptions& g, std::ostream& out) {
    ThetaRule rule;
    rule.max_multiple = max_multiple;
    const auto report =
        conjecture_harness(parse_range(n_text), parse_range(rho_text), rule, g.enumeration());
    if (g.json) {
        Json j;
        j["instances"] = Json::array();
        for (const auto& i : report.instances) j["instances"].push_back(json::to_json(i));
        j["agreements"] = report.agreements();
        j["total"] = report.instances.size();
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "  n theta rho predicted brute  agree\n";
    for (const auto& i : report.instances)
        out << std::setw(3) << i.n << std::setw(6) << i.theta << std::setw(4) << i.rho
            << std::setw(10) << i.predicted << std::setw(6) << i.brute_force << "  "
            << (i.agrees() ? "yes" : "no") << '\n';
    out << "agreement: " << report.agreements() << '/' << report.instances.size() << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional repetition code construction and verification toolkit", "frc"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--workers", g.workers, "Parallel enumeration workers")
        ->check(CLI::Range(1u, 256u));

    // generate
    auto* generate = app.add_subcommand("generate", "Build a code and write it as JSON or CSV");
    generate->require_subcommand(1);
    std::string gen_output;
    std::size_t gen_n = 0, gen_d = 0, gen_theta = 0, gen_rho = 0, gen_t = 0;
    auto* gen_prg = generate->add_subcommand("prg", "Partial regular graph code");
    gen_prg->add_option("--n", gen_n, "Nodes (odd)")->required();
    gen_prg->add_option("--d", gen_d, "Graph degree (odd, < n)")->required();
    auto* gen_ring = generate->add_subcommand("ring", "Ring construction");
    gen_ring->add_option("--n", gen_n, "Nodes")->required();
    gen_ring->add_option("--theta", gen_theta, "Packets")->required();
    gen_ring->add_option("--rho", gen_rho, "Replication factor")->required();
    auto* gen_t_cmd = generate->add_subcommand("t", "Circulant t-construction");
    gen_t_cmd->add_option("--n", gen_n, "Nodes (= packets)")->required();
    gen_t_cmd->add_option("--d", gen_d, "Packets per node")->required();
    gen_t_cmd->add_option("--t", gen_t, "Offset step minus one")->required();
    for (auto* sub : {gen_prg, gen_ring, gen_t_cmd})
        sub->add_option("-o,--output", gen_output, "Output path (.json or .csv)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Profile, identities and reconstruction degree");
    std::string code_path;
    std::size_t file_size = 0;
    analyze->add_option("code", code_path, "Code file")->required();
    analyze->add_option("--file-size", file_size, "File size M (default theta-1)");

    // goodness
    auto* goodness = app.add_subcommand("goodness", "Universal goodness checks");
    bool weak = false, structural = false;
    goodness->add_option("code", code_path, "Code file")->required();
    goodness->add_flag("--weak", weak, "Relax the bound by one");
    goodness->add_flag("--structural", structural, "Also check every k <= alpha by brute force");
    goodness->add_option("--file-size", file_size, "File size M (default theta-1)");

    // repair
    auto* repair = app.add_subcommand("repair", "Plan repair of one failed node");
    std::string failed;
    repair->add_option("code", code_path, "Code file")->required();
    repair->add_option("--fail", failed, "Failed node: 0-based index or label U<i>")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Regenerate parameter tables");
    sweep->require_subcommand(1);
    auto* sweep_ring_cmd = sweep->add_subcommand("ring", "Ring codes with theta = m*n");
    std::string n_range, rho_range, m_range, sweep_output;
    bool per_rho = false;
    sweep_ring_cmd->add_option("--n", n_range, "Node range A..B")->required();
    sweep_ring_cmd->add_option("--rho", rho_range, "Replication range A..B")->required();
    sweep_ring_cmd->add_option("--m", m_range, "Multiplier range A..B (theta = m*n)")->required();
    sweep_ring_cmd->add_option("-o,--output", sweep_output, "CSV output path");
    sweep_ring_cmd->add_flag("--per-rho", per_rho, "Also write one CSV per rho");

    // audit-table
    auto* audit = app.add_subcommand("audit-table", "Audit a parameter table CSV");
    std::string table_path, family, rhs_filter = "none";
    audit->add_option("table", table_path, "Table CSV")->required();
    audit->add_option("--family", family, "Table family")->required()->check(CLI::IsMember({"ring", "t"}));
    audit->add_option("--rhs-filter", rhs_filter, "none | positive | nonnegative")
        ->check(CLI::IsMember({"none", "positive", "nonnegative"}));

    // conjecture
    auto* conjecture =
        app.add_subcommand("conjecture", "Heterogeneous ring formula vs brute force");
    std::size_t max_multiple = 2;
    conjecture->add_option("--n", n_range, "Node range A..B")->required();
    conjecture->add_option("--rho", rho_range, "Replication range A..B")->required();
    conjecture->add_option("--theta-max-multiple", max_multiple,
                           "theta ranges up to this multiple of n")
        ->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            if (gen_prg->parsed())
                emit_generated(build_prg({gen_n, gen_d}), gen_output, g, out);
            else if (gen_ring->parsed())
                emit_generated(build_ring({gen_n, gen_theta, gen_rho}), gen_output, g, out);
            else
                emit_generated(build_t_code({gen_n, gen_d, gen_t}), gen_output, g, out);
            return kExitOk;
        }
        if (analyze->parsed()) return cmd_analyze(code_path, file_size, g, out);
        if (goodness->parsed())
            return cmd_goodness(code_path, weak, structural, file_size, g, out);
        if (repair->parsed()) return cmd_repair(code_path, failed, g, out);
        if (sweep->parsed())
            return cmd_sweep_ring(n_range, rho_range, m_range, sweep_output, per_rho, g, out);
        if (audit->parsed()) return cmd_audit(table_path, family, rhs_filter, g, out);
        if (conjecture->parsed()) return cmd_conjecture(n_range, rho_range, max_multiple, g, out);
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace frc

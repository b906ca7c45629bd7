#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "codegraph/code.hpp"
#include "codegraph/graph.hpp"
#include "codegraph/lambda_coloring.hpp"
#include "codegraph/metric_dimension.hpp"
#include "codegraph/oracle.hpp"
#include "codegraph/report.hpp"
#include "codegraph/threshold_dimension.hpp"

namespace {

using codegraph::OracleBudget;
using codegraph::OracleMode;
using nlohmann::ordered_json;

struct BudgetFlags {
    int beta_n = OracleBudget{}.max_n_beta;
    int lambda_n = OracleBudget{}.max_n_lambda;
    int tau_nonedges = OracleBudget{}.max_nonedges_tau;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-beta-n", beta_n,
                        "largest vertex count for the exact dimension search")
            ->capture_default_str();
        cmd->add_option("--budget-lambda-n", lambda_n,
                        "largest vertex count for the exact span search")
            ->capture_default_str();
        cmd->add_option("--budget-tau-nonedges", tau_nonedges,
                        "largest non-edge count for the supergraph searches")
            ->capture_default_str();
    }

    OracleBudget to_budget() const { return {beta_n, lambda_n, tau_nonedges}; }
};

OracleMode parse_oracle_mode(const std::string& s) {
    if (s == "off") return OracleMode::off;
    if (s == "try") return OracleMode::attempt;
    return OracleMode::require;
}

std::set<std::string> parse_invariants(const std::vector<std::string>& picks) {
    std::set<std::string> out;
    for (const std::string& p : picks) {
        if (p == "all") return codegraph::all_invariants();
        out.insert(p);
    }
    if (out.empty()) return codegraph::all_invariants();
    return out;
}

ordered_json labeling_json(const codegraph::Labeling& lab) {
    ordered_json j;
    j["colors"] = lab.colors;
    j["span"] = lab.span;
    j["holes"] = lab.holes;
    return j;
}

int do_invariants(const std::string& code_text, const std::string& family,
                  const std::string& oracle, const BudgetFlags& budget, bool witness) {
    codegraph::ComputeOptions options;
    options.family = codegraph::family_from_string(family);
    options.oracle = parse_oracle_mode(oracle);
    options.budget = budget.to_budget();
    options.include_witness = witness;
    const codegraph::GeneratingCode code = codegraph::parse_code(code_text);
    const codegraph::InvariantReport report = codegraph::compute_report(code, options);
    std::cout << codegraph::report_to_json(report).dump(2) << '\n';
    return 0;
}

int do_sweep(int max_n, const std::string& family, const std::vector<std::string>& picks,
             const std::string& format, const BudgetFlags& budget) {
    codegraph::SweepOptions options;
    options.max_n = max_n;
    options.family = codegraph::family_from_string(family);
    options.invariants = parse_invariants(picks);
    options.budget = budget.to_budget();
    options.csv = format == "csv";
    if (options.invariants.count("beta") && max_n > options.budget.max_n_beta)
        throw codegraph::BudgetExceeded("sweep: max-n exceeds the dimension budget");
    if (options.invariants.count("lambda") && max_n > options.budget.max_n_lambda)
        throw codegraph::BudgetExceeded("sweep: max-n exceeds the span budget");
    const codegraph::SweepSummary summary = codegraph::run_sweep(options, std::cout);
    if (options.csv)
        std::cerr << codegraph::summary_to_json(summary).dump() << '\n';
    else
        std::cout << codegraph::summary_to_json(summary).dump() << '\n';
    return 0;
}

int do_oracle(const std::string& path, const std::vector<std::string>& picks,
              const BudgetFlags& budget) {
    codegraph::Graph g;
    try {
        if (path == "-") {
            g = codegraph::read_edge_list(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open " + path);
            g = codegraph::read_edge_list(in);
        }
    } catch (const std::runtime_error& e) {
        // malformed graph input is a parse failure, same exit behavior as a bad code
        throw codegraph::ParseError(codegraph::ParseErrorKind::illegal_character, 0, e.what());
    }
    const std::set<std::string> wanted = parse_invariants(picks);
    const OracleBudget b = budget.to_budget();

    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (wanted.count("beta")) {
        const codegraph::BetaOracle r = codegraph::exact_metric_dimension(g, b);
        j["beta"] = ordered_json{{"value", r.beta}, {"basis", r.basis}};
    }
    if (wanted.count("tau")) j["tau"] = ordered_json{{"value", codegraph::exact_tau(g, b)}};
    if (wanted.count("tau_r"))
        j["tau_r"] = ordered_json{{"value", codegraph::exact_tau_r(g, b)}};
    if (wanted.count("lambda")) {
        const codegraph::LambdaOracle r = codegraph::exact_lambda(g, b);
        j["lambda"] = ordered_json{{"value", r.lambda}, {"labeling", labeling_json(r.labeling)}};
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int do_export(const std::string& code_text, const std::string& family,
              const std::string& format) {
    const codegraph::GeneratingCode code = codegraph::parse_code(code_text);
    const codegraph::Graph g = family == "chain" ? codegraph::build_chain(code)
                                                 : codegraph::build_threshold(code);
    if (format == "dot")
        std::cout << codegraph::write_dot(g);
    else
        std::cout << codegraph::write_edge_list(g);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Invariants of threshold and chain graphs realized from binary generating codes"};
    app.require_subcommand(1);

    const std::vector<std::string> family_values = {"threshold", "chain"};
    const std::vector<std::string> invariant_values = {"beta", "tau", "tau_r", "lambda", "all"};

    // invariants
    auto* inv = app.add_subcommand("invariants", "compute all invariants of one code");
    std::string inv_code;
    std::string inv_family = "threshold";
    std::string inv_oracle = "off";
    bool inv_no_witness = false;
    BudgetFlags inv_budget;
    inv->add_option("code", inv_code, "generating code, raw bits or 0^s 1^t tokens")
        ->required();
    inv->add_option("--family", inv_family, "graph realization")
        ->check(CLI::IsMember(family_values))
        ->capture_default_str();
    inv->add_option("--oracle", inv_oracle, "cross-check formulas against exhaustive search")
        ->check(CLI::IsMember({"off", "try", "require"}))
        ->capture_default_str();
    inv->add_flag("--no-witness", inv_no_witness, "omit basis/labeling/witness-code output");
    inv_budget.attach(inv);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "formula-vs-oracle audit over all codes up to a size");
    int sweep_max_n = 8;
    std::string sweep_family = "threshold";
    std::vector<std::string> sweep_invariants;
    std::string sweep_format = "json";
    BudgetFlags sweep_budget;
    sweep->add_option("--max-n", sweep_max_n, "largest total code length to enumerate")
        ->required();
    sweep->add_option("--family", sweep_family, "graph realization")
        ->check(CLI::IsMember(family_values))
        ->capture_default_str();
    sweep->add_option("--invariant", sweep_invariants, "invariants to audit (repeatable)")
        ->check(CLI::IsMember(invariant_values));
    sweep->add_option("--format", sweep_format, "per-code line format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sweep_budget.attach(sweep);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive-search invariants of an edge-list graph");
    std::string oracle_path;
    std::vector<std::string> oracle_invariants;
    BudgetFlags oracle_budget;
    oracle->add_option("graph", oracle_path, "edge-list file (\"n m\" header, one edge per line), or - for stdin")
        ->required();
    oracle->add_option("--invariant", oracle_invariants, "invariants to compute (repeatable)")
        ->check(CLI::IsMember(invariant_values));
    oracle_budget.attach(oracle);

    // export
    auto* exp = app.add_subcommand("export", "write the realized graph of a code");
    std::string exp_code;
    std::string exp_family = "threshold";
    std::string exp_format = "edges";
    exp->add_option("code", exp_code, "generating code, raw bits or 0^s 1^t tokens")
        ->required();
    exp->add_option("--family", exp_family, "graph realization")
        ->check(CLI::IsMember(family_values))
        ->capture_default_str();
    exp->add_option("--format", exp_format, "output format")
        ->check(CLI::IsMember({"edges", "dot"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*inv)
        return do_invariants(inv_code, inv_family, inv_oracle, inv_budget, !inv_no_witness);
    if (*sweep)
        return do_sweep(sweep_max_n, sweep_family, sweep_invariants, sweep_format, sweep_budget);
    if (*oracle) return do_oracle(oracle_path, oracle_invariants, oracle_budget);
    if (*exp) return do_export(exp_code, exp_family, exp_format);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const codegraph::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const codegraph::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

#include "codegraph/report.hpp"

#include <ostream>
#include <sstream>

#include "codegraph/metric_dimension.hpp"
#include "codegraph/threshold_dimension.hpp"

namespace codegraph {

using nlohmann::json;
using nlohmann::ordered_json;

const std::set<std::string>& all_invariants() {
    static const std::set<std::string> names = {"beta", "tau", "tau_r", "lambda"};
    return names;
}

namespace {

bool wants(const ComputeOptions& o, const std::string& name) {
    return o.invariants.count(name) > 0;
}

// Merge a formula value and an optional oracle value into one entry, recording
// a discrepancy when both exist and disagree. The formula value wins the
// `value` slot so reports stay comparable across oracle settings.
void combine(InvariantReport& report, const std::string& name, InvariantEntry& entry,
             std::optional<long long> formula, bool applicable,
             std::optional<long long> oracle) {
    entry.applicable = applicable;
    if (formula && oracle) {
        entry.value = formula;
        entry.source = "both";
        if (*formula != *oracle) report.discrepancies.push_back({name, *formula, *oracle});
    } else if (formula) {
        entry.value = formula;
        entry.source = "formula";
    } else if (oracle) {
        entry.value = oracle;
        entry.source = "oracle";
    } else {
        entry.source = "formula";
    }
}

// Runs fn() unless the mode is off; swallows BudgetExceeded in attempt mode.
template <typename Fn>
std::optional<long long> oracle_value(OracleMode mode, Fn&& fn) {
    if (mode == OracleMode::off) return std::nullopt;
    try {
        return fn();
    } catch (const BudgetExceeded&) {
        if (mode == OracleMode::require) throw;
        return std::nullopt;
    }
}

}  // namespace

InvariantReport compute_report(const GeneratingCode& code, const ComputeOptions& options) {
    InvariantReport report;
    report.code = to_string(code);
    report.family = options.family;

    const Graph g = options.family == Family::threshold ? build_threshold(code)
                                                        : build_chain(code);
    report.n = g.vertex_count();
    report.m = g.edge_count();

    if (wants(options, "beta")) {
        const BetaResult formula =
            options.family == Family::threshold ? beta_threshold(code) : beta_chain(code);
        std::optional<long long> oracle;
        if (options.oracle != OracleMode::off) {
            std::optional<BetaOracle> out;
            oracle = oracle_value(options.oracle, [&] {
                out = exact_metric_dimension(g, options.budget);
                return out->beta;
            });
            if (out && options.include_witness) report.witness.basis = out->basis;
        }
        combine(report, "beta", report.beta, formula.value, true, oracle);
    }

    if (wants(options, "tau")) {
        std::optional<long long> formula;
        bool applicable = false;
        if (options.family == Family::threshold) {
            const TauResult t = tau_code(code);
            applicable = t.applicable;
            if (t.applicable) formula = t.value;
        }
        const std::optional<long long> oracle = oracle_value(
            options.oracle, [&] { return exact_tau(g, options.budget); });
        combine(report, "tau", report.tau, formula, applicable, oracle);
    }

    if (wants(options, "tau_r")) {
        std::optional<long long> formula;
        bool applicable = false;
        if (options.family == Family::threshold) {
            const TauRResult t = tau_r_code(code);
            applicable = true;
            formula = t.value;
            if (options.include_witness)
                report.witness.rewritten_code = to_string(t.rewritten_code);
        }
        const std::optional<long long> oracle = oracle_value(
            options.oracle, [&] { return exact_tau_r(g, options.budget); });
        combine(report, "tau_r", report.tau_r, formula, applicable, oracle);
    }

    if (wants(options, "lambda")) {
        std::optional<long long> formula;
        if (options.family == Family::threshold) {
            formula = lambda_threshold(code).span;
        } else {
            const ChainLambda c = lambda_chain(partition_from_code(code));
            formula = c.span;
            if (options.include_witness) report.witness.labeling = c.labeling;
        }
        const std::optional<long long> oracle = oracle_value(
            options.oracle, [&] { return exact_lambda(g, options.budget).lambda; });
        combine(report, "lambda", report.lambda, formula, true, oracle);
    }

    return report;
}

namespace {

ordered_json entry_to_json(const InvariantEntry& e) {
    ordered_json j;
    j["value"] = e.value ? json(*e.value) : json(nullptr);
    j["source"] = e.source;
    j["applicable"] = e.applicable;
    return j;
}

InvariantEntry entry_from_json(const json& j) {
    InvariantEntry e;
    if (j.contains("value") && !j["value"].is_null()) e.value = j["value"].get<long long>();
    e.source = j.value("source", "formula");
    e.applicable = j.value("applicable", true);
    return e;
}

ordered_json labeling_to_json(const Labeling& lab) {
    ordered_json j;
    j["colors"] = lab.colors;
    j["span"] = lab.span;
    j["holes"] = lab.holes;
    return j;
}

Labeling labeling_from_json(const json& j) {
    Labeling lab;
    lab.colors = j.at("colors").get<std::vector<long long>>();
    lab.span = j.at("span").get<long long>();
    lab.holes = j.value("holes", std::vector<long long>{});
    return lab;
}

}  // namespace

ordered_json report_to_json(const InvariantReport& report) {
    ordered_json j;
    j["code"] = report.code;
    j["family"] = to_string(report.family);
    j["n"] = report.n;
    j["m"] = report.m;
    j["beta"] = entry_to_json(report.beta);
    j["tau"] = entry_to_json(report.tau);
    j["tau_r"] = entry_to_json(report.tau_r);
    j["lambda"] = entry_to_json(report.lambda);
    j["discrepancies"] = ordered_json::array();
    for (const Discrepancy& d : report.discrepancies) {
        ordered_json dj;
        dj["invariant"] = d.invariant;
        dj["formula_value"] = d.formula_value;
        dj["oracle_value"] = d.oracle_value;
        j["discrepancies"].push_back(dj);
    }
    if (!report.witness.empty()) {
        ordered_json w;
        if (report.witness.basis) w["basis"] = *report.witness.basis;
        if (report.witness.labeling) w["labeling"] = labeling_to_json(*report.witness.labeling);
        if (report.witness.rewritten_code) w["rewritten_code"] = *report.witness.rewritten_code;
        j["witness"] = w;
    }
    return j;
}

InvariantReport report_from_json(const json& j) {
    InvariantReport report;
    report.code = j.at("code").get<std::string>();
    report.family = family_from_string(j.at("family").get<std::string>());
    report.n = j.at("n").get<long long>();
    report.m = j.at("m").get<long long>();
    report.beta = entry_from_json(j.at("beta"));
    report.tau = entry_from_json(j.at("tau"));
    report.tau_r = entry_from_json(j.at("tau_r"));
    report.lambda = entry_from_json(j.at("lambda"));
    for (const json& dj : j.value("discrepancies", json::array())) {
        report.discrepancies.push_back({dj.at("invariant").get<std::string>(),
                                        dj.at("formula_value").get<long long>(),
                                        dj.at("oracle_value").get<long long>()});
    }
    if (j.contains("witness")) {
        const json& w = j["witness"];
        if (w.contains("basis")) report.witness.basis = w["basis"].get<std::vector<int>>();
        if (w.contains("labeling")) report.witness.labeling = labeling_from_json(w["labeling"]);
        if (w.contains("rewritten_code"))
            report.witness.rewritten_code = w["rewritten_code"].get<std::string>();
    }
    return report;
}

std::string csv_header() {
    return "code,family,n,m,beta_formula,beta_oracle,tau_formula,tau_oracle,"
           "tau_r_formula,tau_r_oracle,lambda_formula,lambda_oracle,discrepancies";
}

std::string report_to_csv_row(const InvariantReport& report) {
    std::ostringstream out;
    out << '"' << report.code << '"' << ',' << to_string(report.family) << ',' << report.n
        << ',' << report.m;
    const InvariantEntry* entries[4] = {&report.beta, &report.tau, &report.tau_r,
                                        &report.lambda};
    const std::string names[4] = {"beta", "tau", "tau_r", "lambda"};
    for (int i = 0; i < 4; ++i) {
        const InvariantEntry& e = *entries[i];
        std::string formula_cell, oracle_cell;
        if (e.value) {
            if (e.source == "oracle")
                oracle_cell = std::to_string(*e.value);
            else
                formula_cell = std::to_string(*e.value);
        }
        if (e.source == "both") {
            oracle_cell = formula_cell;
            for (const Discrepancy& d : report.discrepancies)
                if (d.invariant == names[i]) oracle_cell = std::to_string(d.oracle_value);
        }
        out << ',' << formula_cell << ',' << oracle_cell;
    }
    out << ',' << report.discrepancies.size();
    return out.str();
}

ordered_json summary_to_json(const SweepSummary& summary) {
    ordered_json j;
    ordered_json body;
    body["codes_tested"] = summary.codes_tested;
    body["agreements"] = summary.agreements;
    body["discrepancies"] = ordered_json::array();
    for (const SweepDiscrepancy& d : summary.discrepancies) {
        ordered_json dj;
        dj["code"] = d.code;
        dj["invariant"] = d.invariant;
        dj["formula_value"] = d.formula_value;
        dj["oracle_value"] = d.oracle_value;
        body["discrepancies"].push_back(dj);
    }
    j["summary"] = body;
    return j;
}

SweepSummary run_sweep(const SweepOptions& options, std::ostream& out) {
    SweepSummary summary;
    ComputeOptions per_code;
    per_code.family = options.family;
    per_code.oracle = OracleMode::attempt;
    per_code.budget = options.budget;
    per_code.invariants = options.invariants;

    if (options.csv) out << csv_header() << '\n';
    for (const GeneratingCode& code : enumerate_codes(options.max_n)) {
        const InvariantReport report = compute_report(code, per_code);
        ++summary.codes_tested;
        if (report.discrepancies.empty()) {
            ++summary.agreements;
        } else {
            for (const Discrepancy& d : report.discrepancies)
                summary.discrepancies.push_back(
                    {report.code, d.invariant, d.formula_value, d.oracle_value});
        }
        if (options.csv)
            out << report_to_csv_row(report) << '\n';
        else
            out << report_to_json(report).dump() << '\n';
    }
    return summary;
}

}  // namespace codegraph

#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "codegraph/code.hpp"
#include "codegraph/graph.hpp"
#include "codegraph/lambda_coloring.hpp"
#include "codegraph/oracle.hpp"

namespace codegraph {

enum class OracleMode { off, attempt, require };

struct InvariantEntry {
    std::optional<long long> value;
    std::string source = "formula";  // formula | oracle | both
    bool applicable = true;
};

struct Discrepancy {
    std::string invariant;
    long long formula_value = 0;
    long long oracle_value = 0;
};

struct ReportWitness {
    std::optional<std::vector<int>> basis;
    std::optional<Labeling> labeling;
    std::optional<std::string> rewritten_code;

    bool empty() const { return !basis && !labeling && !rewritten_code; }
};

struct InvariantReport {
    std::string code;
    Family family = Family::threshold;
    long long n = 0;
    long long m = 0;
    InvariantEntry beta, tau, tau_r, lambda;
    std::vector<Discrepancy> discrepancies;
    ReportWitness witness;
};

// All four invariant names, the default selection.
const std::set<std::string>& all_invariants();

struct ComputeOptions {
    Family family = Family::threshold;
    OracleMode oracle = OracleMode::off;
    OracleBudget budget;
    std::set<std::string> invariants = all_invariants();
    bool include_witness = true;
};

// Build the family graph of the code and fill a report: formula engines
// always run where defined; oracles run when the mode asks for them and the
// instance fits the budget. In require mode BudgetExceeded propagates.
InvariantReport compute_report(const GeneratingCode& code, const ComputeOptions& options);

nlohmann::ordered_json report_to_json(const InvariantReport& report);
InvariantReport report_from_json(const nlohmann::json& j);

// One CSV row per report, matching csv_header(); absent values are empty cells.
std::string csv_header();
std::string report_to_csv_row(const InvariantReport& report);

struct SweepDiscrepancy {
    std::string code;
    std::string invariant;
    long long formula_value = 0;
    long long oracle_value = 0;
};

struct SweepSummary {
    long long codes_tested = 0;
    long long agreements = 0;  // codes whose dual-sourced invariants all agree
    std::vector<SweepDiscrepancy> discrepancies;
};

struct SweepOptions {
    int max_n = 8;
    Family family = Family::threshold;
    std::set<std::string> invariants = all_invariants();
    OracleBudget budget;
    bool csv = false;
};

nlohmann::ordered_json summary_to_json(const SweepSummary& summary);

// Enumerate every valid code with total expanded length <= max_n and write one
// report per code to out (JSON lines or CSV rows); oracles run in attempt
// mode. Returns the summary; the caller decides where to print it.
SweepSummary run_sweep(const SweepOptions& options, std::ostream& out);

}  // namespace codegraph

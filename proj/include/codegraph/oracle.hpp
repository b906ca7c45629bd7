#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "codegraph/graph.hpp"
#include "codegraph/lambda_coloring.hpp"

namespace codegraph {

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class NoThresholdSupergraph : public std::runtime_error {
  public:
    explicit NoThresholdSupergraph(const std::string& what) : std::runtime_error(what) {}
};

// Size caps for the exhaustive searches; exceeding one raises BudgetExceeded.
struct OracleBudget {
    int max_n_beta = 15;
    int max_n_lambda = 12;
    int max_nonedges_tau = 14;
};

struct BetaOracle {
    long long beta = 0;
    std::vector<int> basis;  // lexicographically least minimum resolving set
};

struct LambdaOracle {
    long long lambda = 0;
    Labeling labeling;
};

// Smallest resolving set by exhaustive ascending-size search.
BetaOracle exact_metric_dimension(const Graph& g, const OracleBudget& budget = {});

// Minimum span by ascending-span backtracking; the witness labeling always
// satisfies verify_labeling.
LambdaOracle exact_lambda(const Graph& g, const OracleBudget& budget = {});

// Minimum metric dimension over all edge-supersets of g.
long long exact_tau(const Graph& g, const OracleBudget& budget = {});

// Same, restricted to edge-supersets that are threshold graphs.
long long exact_tau_r(const Graph& g, const OracleBudget& budget = {});

}  // namespace codegraph

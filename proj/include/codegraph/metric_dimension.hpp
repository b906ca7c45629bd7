#pragma once

#include <string>
#include <vector>

#include "codegraph/code.hpp"
#include "codegraph/graph.hpp"

namespace codegraph {

// One step of the iterative metric-dimension computation.
struct BetaStage {
    int string_index = 0;        // 0-based
    std::string rule;            // which case produced the increment
    long long increment = 0;     // contribution of this string
    long long running_total = 0;
};

struct BetaResult {
    long long value = 0;
    Family family = Family::threshold;
    std::vector<BetaStage> trace;
};

struct BetaBounds {
    long long lower = 0;  // sum of (s_i + t_i - 2)
    long long upper = 0;  // sum of (s_i + t_i - 1)
    bool lower_attained_known = false;  // guaranteed when every s_i, t_i > 1
    bool upper_attained = false;        // exactly when every s_i == 1
};

struct GeneralBounds {
    long long lower = 0;  // least k >= 1 with k + d^k >= n
    long long upper = 0;  // n - d
};

// Metric dimension of the threshold realization of a single string 0^s 1^t.
long long beta_string(long long s, long long t);

// Metric dimension of the threshold realization of a code, computed by the
// string-by-string iteration with the star-prefix correction.
BetaResult beta_threshold(const GeneratingCode& code);

// Metric dimension of the chain realization of a code: same iteration with the
// two-string chain base cases.
BetaResult beta_chain(const GeneratingCode& code);

BetaBounds beta_bounds(const GeneratingCode& code);

// Bounds valid for any connected graph with n vertices and diameter d.
GeneralBounds general_bounds(long long n, long long d);

}  // namespace codegraph

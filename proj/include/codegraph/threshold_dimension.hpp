#pragma once

#include <stdexcept>
#include <string>

#include "codegraph/code.hpp"

namespace codegraph {

// Thrown when an invariant's closed form does not cover the given input
// (e.g. the single-string threshold-dimension formula needs s >= 3).
class InapplicableInput : public std::runtime_error {
  public:
    explicit InapplicableInput(const std::string& what) : std::runtime_error(what) {}
};

struct TauResult {
    long long value = 0;
    long long witness_k = 0;       // distinguishing-set parameter that realized the value
    bool applicable = false;       // false when no covered case matched
    std::string condition_trace;   // which case fired, e.g. "two-string(i): k1=3"
};

struct TauRResult {
    long long value = 0;
    GeneratingCode rewritten_code;  // dominating code whose threshold graph is the witness
};

// Threshold dimension of the threshold graph of a single string 0^s 1^t.
// Requires s >= 3 (otherwise the graph's diameter is too small for the
// reduction to apply); throws InapplicableInput below that.
TauResult tau_string(long long s, long long t);

// Whether parameter k satisfies the single-string feasibility test
// s - k <= 2^k - 1 (with k >= 2).
bool tau_string_condition(long long s, long long k);

// Threshold dimension of the threshold graph of a code, dispatching on the
// number of strings.  Cases not covered return applicable == false.
TauResult tau_code(const GeneratingCode& code);

// Restricted threshold dimension of a single string; requires s >= 4.
TauRResult tau_r_string(long long s, long long t);

// Restricted threshold dimension of a code: rewrite long zero-runs, apply the
// alternating substitution, and evaluate the metric dimension of the result.
TauRResult tau_r_code(const GeneratingCode& code);

// The rewriting step of tau_r_code exposed for inspection/testing: returns the
// dominating code whose threshold realization serves as witness.
GeneratingCode tau_r_rewrite(const GeneratingCode& code);

}  // namespace codegraph

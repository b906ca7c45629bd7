#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "codegraph/code.hpp"
#include "codegraph/graph.hpp"

namespace codegraph {

class SizeMismatch : public std::runtime_error {
  public:
    explicit SizeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// A distance-constrained coloring: adjacent vertices must differ by >= 2,
// vertices at distance two by >= 1.
struct Labeling {
    std::vector<long long> colors;  // construction-vertex order
    long long span = 0;             // max color - min color
    std::vector<long long> holes;   // unused integers strictly between min and max
};

// Bipartite nested-neighborhood graph G(m_1..m_l; n_1..n_l): cell U_i (size
// m_i) is completely joined to V_1 .. V_{l+1-i}.
struct ChainPartition {
    std::vector<long long> m;
    std::vector<long long> nn;

    int length() const { return static_cast<int>(m.size()); }
    long long total() const;
};

struct ThresholdLambda {
    long long span = 0;
    std::vector<long long> holes_per_stage;  // carry-over slack h_i per string
};

struct ChainStage {
    int stage = 0;          // 2-based: V-cell index
    long long reused = 0;   // colors taken descending from the shared pointer
    long long fresh = 0;    // colors drawn above the current maximum
    long long credit_after = 0;
};

struct ChainLambda {
    long long span = 0;
    Labeling labeling;  // for the chain realization of code_from_partition
    std::vector<ChainStage> trace;
};

struct ChainBounds {
    long long lower = 0;
    long long upper = 0;
    bool min_attained = false;  // every n_{i+1} <= m_{l+1-i}
    bool max_attained = false;  // every n_{i+1} >  m_{l+1-i}
};

// Minimum span of the threshold realization, by the stage formula
// 2*sum(t_i) + (s_1 - 1) + sum over i < k of max(s_{i+1} - h_i, 0)
// with h_i = t_i + max(t_{i-1} - s_i, 0), t_0 = 0.
ThresholdLambda lambda_threshold(const GeneratingCode& code);

// Span after attaching m pendant-like and n dominating vertices to a
// diameter-two base with span s and k holes: s + max(m - k, 0) + 2n.
long long extend_diameter_two(long long s, long long hole_count, long long m, long long n);

// Explicit minimum-span coloring of the chain graph of a partition: U cells
// get 0..M-1, V_1 sits above a gap at M, later V cells reuse colors of
// far-away U cells while a running credit decides when fresh colors are
// needed.
ChainLambda lambda_chain(const ChainPartition& p);

ChainBounds lambda_chain_bounds(const ChainPartition& p);

// True iff lab satisfies both distance constraints on g and its span/holes
// fields match the colors. Throws SizeMismatch when sizes disagree.
bool verify_labeling(const Graph& g, const Labeling& lab);

// The chain realization of a code is the partition with m_i = s_i and
// n_j = t_{k+1-j}; these convert between the two descriptions.
ChainPartition partition_from_code(const GeneratingCode& code);
GeneratingCode code_from_partition(const ChainPartition& p);

}  // namespace codegraph

#include "codegraph/lambda_coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace codegraph {

namespace {

void check_partition(const ChainPartition& p) {
    if (p.m.empty() || p.m.size() != p.nn.size())
        throw SizeMismatch("chain partition: need equal nonempty cell lists");
    for (long long v : p.m)
        if (v < 1) throw SizeMismatch("chain partition: cell sizes must be positive");
    for (long long v : p.nn)
        if (v < 1) throw SizeMismatch("chain partition: cell sizes must be positive");
}

}  // namespace

long long ChainPartition::total() const {
    long long sum = 0;
    for (long long v : m) sum += v;
    for (long long v : nn) sum += v;
    return sum;
}

ThresholdLambda lambda_threshold(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("lambda_threshold: empty code");
    ThresholdLambda r;
    long long sum_t = 0;
    for (const CodeString& cs : code.strings) sum_t += cs.ones;
    r.span = 2 * sum_t + (code.strings.front().zeros - 1);
    long long prev_t = 0;
    for (int i = 0; i < code.string_count(); ++i) {
        const CodeString& cs = code.strings[static_cast<size_t>(i)];
        const long long h = cs.ones + std::max(prev_t - cs.zeros, 0LL);
        r.holes_per_stage.push_back(h);
        if (i + 1 < code.string_count()) {
            const long long next_s = code.strings[static_cast<size_t>(i) + 1].zeros;
            r.span += std::max(next_s - h, 0LL);
        }
        prev_t = cs.ones;
    }
    return r;
}

long long extend_diameter_two(long long s, long long hole_count, long long m, long long n) {
    if (s < 0 || hole_count < 0 || m < 0 || n < 0)
        throw std::invalid_argument("extend_diameter_two: negative argument");
    return s + std::max(m - hole_count, 0LL) + 2 * n;
}

ChainLambda lambda_chain(const ChainPartition& p) {
    check_partition(p);
    const int l = p.length();
    long long big_m = 0;
    for (long long v : p.m) big_m += v;

    // Per-cell color lists, assembled into construction order afterwards.
    std::vector<std::vector<long long>> u_colors(static_cast<size_t>(l));
    std::vector<std::vector<long long>> v_colors(static_cast<size_t>(l));

    long long next_u = 0;
    for (int i = 0; i < l; ++i)
        for (long long j = 0; j < p.m[static_cast<size_t>(i)]; ++j)
            u_colors[static_cast<size_t>(i)].push_back(next_u++);

    for (long long j = 0; j < p.nn[0]; ++j) v_colors[0].push_back(big_m + 1 + j);

    ChainLambda r;
    long long reuse_ptr = big_m;            // next color handed out downward
    long long max_color = big_m + p.nn[0];  // top of V_1
    long long credit = 0;
    for (int i = 2; i <= l; ++i) {
        const long long supply = p.m[static_cast<size_t>(l + 1 - i)];  // |U_{l+2-i}|
        const long long demand = p.nn[static_cast<size_t>(i - 1)];     // |V_i|
        credit += supply - demand;
        long long fresh = 0;
        if (credit < 0) {
            fresh = -credit;
            credit = 0;
        }
        const long long reused = demand - fresh;
        for (long long j = 0; j < reused; ++j)
            v_colors[static_cast<size_t>(i - 1)].push_back(reuse_ptr--);
        for (long long j = 0; j < fresh; ++j)
            v_colors[static_cast<size_t>(i - 1)].push_back(++max_color);
        r.trace.push_back({i, reused, fresh, credit});
    }

    r.span = max_color;

    // Construction order of the corresponding code: string i contributes the
    // U_i cell then the V_{l+1-i} cell.
    for (int i = 0; i < l; ++i) {
        for (long long c : u_colors[static_cast<size_t>(i)]) r.labeling.colors.push_back(c);
        for (long long c : v_colors[static_cast<size_t>(l - 1 - i)]) r.labeling.colors.push_back(c);
    }
    r.labeling.span = max_color;

    std::set<long long> used(r.labeling.colors.begin(), r.labeling.colors.end());
    for (long long c = 1; c < max_color; ++c)
        if (!used.count(c)) r.labeling.holes.push_back(c);
    return r;
}

ChainBounds lambda_chain_bounds(const ChainPartition& p) {
    check_partition(p);
    const int l = p.length();
    ChainBounds b;
    for (long long v : p.m) b.lower += v;
    b.lower += p.nn[0];
    b.upper = b.lower;
    b.min_attained = true;
    b.max_attained = true;
    for (int i = 1; i < l; ++i) {
        const long long n_next = p.nn[static_cast<size_t>(i)];
        const long long m_mirror = p.m[static_cast<size_t>(l - i)];
        // worst case: no credit ever carries over, so each stage pays its
        // full excess in fresh colors
        b.upper += std::max(n_next - m_mirror, 0LL);
        if (n_next > m_mirror)
            b.min_attained = false;
        else
            b.max_attained = false;
    }
    return b;
}

bool verify_labeling(const Graph& g, const Labeling& lab) {
    const int n = g.vertex_count();
    if (static_cast<size_t>(n) != lab.colors.size())
        throw SizeMismatch("labeling covers " + std::to_string(lab.colors.size()) +
                           " vertices, graph has " + std::to_string(n));
    if (n == 0) return lab.span == 0 && lab.holes.empty();
    for (int u = 0; u < n; ++u) {
        const std::vector<int> dist = g.distances_from(u);
        for (int v = u + 1; v < n; ++v) {
            const long long gap = std::llabs(lab.colors[static_cast<size_t>(u)] -
                                             lab.colors[static_cast<size_t>(v)]);
            if (dist[static_cast<size_t>(v)] == 1 && gap < 2) return false;
            if (dist[static_cast<size_t>(v)] == 2 && gap < 1) return false;
        }
    }
    const auto [lo_it, hi_it] = std::minmax_element(lab.colors.begin(), lab.colors.end());
    if (lab.span != *hi_it - *lo_it) return false;
    std::set<long long> used(lab.colors.begin(), lab.colors.end());
    std::vector<long long> holes;
    for (long long c = *lo_it + 1; c < *hi_it; ++c)
        if (!used.count(c)) holes.push_back(c);
    return holes == lab.holes;
}

ChainPartition partition_from_code(const GeneratingCode& code) {
    if (code.strings.empty()) throw std::invalid_argument("partition_from_code: empty code");
    ChainPartition p;
    const int k = code.string_count();
    for (int i = 0; i < k; ++i) p.m.push_back(code.strings[static_cast<size_t>(i)].zeros);
    for (int j = 0; j < k; ++j) p.nn.push_back(code.strings[static_cast<size_t>(k - 1 - j)].ones);
    return p;
}

GeneratingCode code_from_partition(const ChainPartition& p) {
    check_partition(p);
    std::vector<CodeString> strings;
    const int l = p.length();
    for (int j = 0; j < l; ++j)
        strings.push_back({p.m[static_cast<size_t>(j)], p.nn[static_cast<size_t>(l - 1 - j)]});
    return make_code(strings);
}

}  // namespace codegraph

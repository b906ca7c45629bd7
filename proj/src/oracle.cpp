#include "codegraph/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "codegraph/metric_dimension.hpp"

namespace codegraph {

namespace {

// Advance an ascending index combination; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - (k - i)) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
            return true;
        }
    }
    return false;
}

// Distances packed 4 bits per entry keyed per landmark; n <= 15 keeps every
// distance < 15 and every key within 60 bits.
bool resolves(const std::vector<int>& dist, int n, const std::vector<int>& subset,
              std::vector<std::uint64_t>& keys) {
    keys.clear();
    for (int v = 0; v < n; ++v) {
        std::uint64_t key = 0;
        int shift = 0;
        for (int w : subset) {
            key |= static_cast<std::uint64_t>(
                       dist[static_cast<size_t>(v) * static_cast<size_t>(n) +
                            static_cast<size_t>(w)])
                   << shift;
            shift += 4;
        }
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

// Smallest resolving set of size < size_cap over the given distances, or an
// empty vector when none exists below the cap.
std::vector<int> smallest_resolving(const std::vector<int>& dist, int n, int size_cap,
                                    std::vector<std::uint64_t>& keys) {
    for (int k = 1; k < size_cap; ++k) {
        std::vector<int> subset(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
        do {
            if (resolves(dist, n, subset, keys)) return subset;
        } while (next_combination(subset, n));
    }
    return {};
}

std::vector<int> flat_distances(const Graph& g) {
    const DistanceMatrix dm = distance_matrix(g);  // throws DisconnectedGraph
    return dm.d;
}

long long min_beta_over_supersets(const Graph& g, const OracleBudget& budget,
                                  bool threshold_only) {
    const int n = g.vertex_count();
    if (n > budget.max_n_beta)
        throw BudgetExceeded("supergraph search: n=" + std::to_string(n) +
                             " exceeds dimension budget " + std::to_string(budget.max_n_beta));
    if (!g.is_connected())
        throw DisconnectedGraph("supergraph search needs a connected base graph");

    std::vector<std::pair<int, int>> nonedges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) nonedges.emplace_back(u, v);
    if (static_cast<int>(nonedges.size()) > budget.max_nonedges_tau)
        throw BudgetExceeded("supergraph search: " + std::to_string(nonedges.size()) +
                             " non-edges exceed budget " +
                             std::to_string(budget.max_nonedges_tau));

    // Adding edges never increases a distance, so the base diameter caps every
    // superset's diameter and the dimension lower bound for that diameter
    // floors all of them.
    const int base_diameter = diameter(g);
    const long long floor_value =
        n < 2 ? 0 : general_bounds(n, std::max(base_diameter, 1)).lower;
    const bool flat = base_diameter <= 2;  // distances are adjacency-determined

    long long best = std::numeric_limits<long long>::max();
    std::vector<std::uint64_t> keys;
    std::vector<int> dist(static_cast<size_t>(n) * static_cast<size_t>(n));
    Graph h(n);
    for (std::uint64_t mask = 0; mask < (1ULL << nonedges.size()); ++mask) {
        h = g;
        for (size_t b = 0; b < nonedges.size(); ++b)
            if (mask >> b & 1ULL) h.add_edge(nonedges[b].first, nonedges[b].second);
        if (threshold_only && !recognize_threshold(h)) continue;

        if (flat) {
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    dist[static_cast<size_t>(u) * static_cast<size_t>(n) +
                         static_cast<size_t>(v)] = u == v ? 0 : (h.has_edge(u, v) ? 1 : 2);
        } else {
            dist = flat_distances(h);
        }
        const int cap = static_cast<int>(std::min<long long>(best, n));
        const std::vector<int> found = smallest_resolving(dist, n, cap, keys);
        if (!found.empty()) {
            best = static_cast<long long>(found.size());
            if (best == floor_value) break;
        }
    }
    if (best == std::numeric_limits<long long>::max()) {
        if (threshold_only)
            throw NoThresholdSupergraph("no threshold edge-superset found");
        best = n - 1;  // only possible when the base is already complete
    }
    return best;
}

}  // namespace

BetaOracle exact_metric_dimension(const Graph& g, const OracleBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_n_beta)
        throw BudgetExceeded("metric dimension search: n=" + std::to_string(n) +
                             " exceeds budget " + std::to_string(budget.max_n_beta));
    BetaOracle r;
    if (n <= 1) return r;  // a single vertex is resolved by the empty set
    const std::vector<int> dist = flat_distances(g);
    std::vector<std::uint64_t> keys;
    std::vector<int> found = smallest_resolving(dist, n, n, keys);
    if (found.empty()) {
        // Complete-graph worst case: all but one vertex.
        found.resize(static_cast<size_t>(n) - 1);
        for (int i = 0; i + 1 < n; ++i) found[static_cast<size_t>(i)] = i;
    }
    r.basis = std::move(found);
    r.beta = static_cast<long long>(r.basis.size());
    return r;
}

namespace {

struct LambdaSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<int> order;      // assignment order: degree desc, id asc
    std::vector<int> dist;       // row-major pairwise distances (-1 unreachable)
    std::vector<long long> colors;  // by vertex id; -1 unassigned
    long long span_cap = 0;

    int d(int u, int v) const {
        return dist[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
    }

    bool assign(size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        // Complementing every color against the cap maps valid labelings to
        // valid labelings, so the first vertex never needs the upper half.
        const long long limit = pos == 0 ? span_cap / 2 : span_cap;
        for (long long c = 0; c <= limit; ++c) {
            bool ok = true;
            for (size_t j = 0; j < pos && ok; ++j) {
                const int u = order[j];
                const long long gap = std::llabs(c - colors[static_cast<size_t>(u)]);
                const int duv = d(u, v);
                if (duv == 1 && gap < 2) ok = false;
                if (duv == 2 && gap < 1) ok = false;
            }
            if (!ok) continue;
            colors[static_cast<size_t>(v)] = c;
            if (assign(pos + 1)) return true;
            colors[static_cast<size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

LambdaOracle exact_lambda(const Graph& g, const OracleBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_n_lambda)
        throw BudgetExceeded("span search: n=" + std::to_string(n) + " exceeds budget " +
                             std::to_string(budget.max_n_lambda));
    LambdaOracle r;
    if (n == 0) return r;
    if (n == 1) {
        r.labeling.colors = {0};
        return r;
    }

    LambdaSearch search;
    search.g = &g;
    search.n = n;
    search.dist.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        const std::vector<int> row = g.distances_from(u);
        for (int v = 0; v < n; ++v)
            search.dist[static_cast<size_t>(u) * static_cast<size_t>(n) +
                        static_cast<size_t>(v)] = row[static_cast<size_t>(v)];
    }
    search.order.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) search.order[static_cast<size_t>(v)] = v;
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });

    const long long start = g.edge_count() > 0 ? g.max_degree() + 1 : 0;
    for (long long span = start;; ++span) {
        search.colors.assign(static_cast<size_t>(n), -1);
        search.span_cap = span;
        if (search.assign(0)) {
            r.lambda = span;
            r.labeling.colors = search.colors;
            const auto [lo, hi] =
                std::minmax_element(r.labeling.colors.begin(), r.labeling.colors.end());
            r.labeling.span = *hi - *lo;
            std::set<long long> used(r.labeling.colors.begin(), r.labeling.colors.end());
            for (long long c = *lo + 1; c < *hi; ++c)
                if (!used.count(c)) r.labeling.holes.push_back(c);
            return r;
        }
    }
}

long long exact_tau(const Graph& g, const OracleBudget& budget) {
    return min_beta_over_supersets(g, budget, false);
}

long long exact_tau_r(const Graph& g, const OracleBudget& budget) {
    return min_beta_over_supersets(g, budget, true);
}

}  // namespace codegraph

#include "codegraph/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <sstream>

namespace codegraph {

std::string to_string(Family f) {
    return f == Family::threshold ? "threshold" : "chain";
}

Family family_from_string(const std::string& s) {
    if (s == "threshold") return Family::threshold;
    if (s == "chain") return Family::chain;
    throw std::invalid_argument("unknown family: " + s);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) return;
    adj_[idx(u, v)] = true;
    adj_[idx(v, u)] = true;
}

void Graph::remove_edge(int u, int v) {
    adj_[idx(u, v)] = false;
    adj_[idx(v, u)] = false;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) ++d;
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

std::vector<int> Graph::distances_from(int source) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u = 0; u < n_; ++u) {
            if (adj_[idx(v, u)] && dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix m;
    m.n = g.vertex_count();
    m.d.resize(static_cast<std::size_t>(m.n) * m.n, -1);
    for (int v = 0; v < m.n; ++v) {
        auto row = g.distances_from(v);
        for (int u = 0; u < m.n; ++u) {
            if (row[static_cast<std::size_t>(u)] < 0)
                throw DisconnectedGraph("distance matrix requires a connected graph");
            m.d[static_cast<std::size_t>(v) * m.n + u] = row[static_cast<std::size_t>(u)];
        }
    }
    return m;
}

int diameter(const Graph& g) {
    auto m = distance_matrix(g);
    return *std::max_element(m.d.begin(), m.d.end());
}

namespace {

Graph build_from_code(const GeneratingCode& code, bool dominate_all) {
    long long n = code.total_length();
    Graph g(static_cast<int>(n));
    g.cells.reserve(static_cast<std::size_t>(n));
    int v = 0;
    for (int si = 0; si < code.string_count(); ++si) {
        const auto& s = code.strings[static_cast<std::size_t>(si)];
        for (long long i = 0; i < s.zeros; ++i) {
            g.cells.push_back({si, Part::independent});
            ++v;
        }
        for (long long i = 0; i < s.ones; ++i) {
            for (int u = 0; u < v; ++u)
                if (dominate_all || g.cells[static_cast<std::size_t>(u)].part == Part::independent)
                    g.add_edge(v, u);
            g.cells.push_back({si, Part::complete});
            ++v;
        }
    }
    return g;
}

}  // namespace

Graph build_threshold(const GeneratingCode& code) { return build_from_code(code, true); }
Graph build_chain(const GeneratingCode& code) { return build_from_code(code, false); }

namespace {

// Degree sequence of the induced subgraph on 4 vertices, plus its edge count,
// identifies each forbidden pattern uniquely.
bool quad_matches(const Graph& g, int a, int b, int c, int d, int want_edges,
                  const std::array<int, 4>& want_degs) {
    std::array<int, 4> vs{a, b, c, d};
    std::array<int, 4> deg{0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) {
                ++edges;
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
            }
    if (edges != want_edges) return false;
    std::sort(deg.begin(), deg.end());
    return deg == want_degs;
}

}  // namespace

bool recognize_threshold(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (quad_matches(g, a, b, c, d, 3, {1, 1, 2, 2})) return false;  // P4
                    if (quad_matches(g, a, b, c, d, 4, {2, 2, 2, 2})) return false;  // C4
                    if (quad_matches(g, a, b, c, d, 2, {1, 1, 1, 1})) return false;  // 2K2
                }
    return true;
}

bool recognize_chain(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return false;  // C3
                for (int d = c + 1; d < n; ++d)
                    if (quad_matches(g, a, b, c, d, 2, {1, 1, 1, 1})) return false;  // 2K2
            }
    // Induced C5: five vertices, five induced edges, all induced degrees 2.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        std::array<int, 5> vs{a, b, c, d, e};
                        std::array<int, 5> deg{0, 0, 0, 0, 0};
                        int edges = 0;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j)
                                if (g.has_edge(vs[static_cast<std::size_t>(i)],
                                               vs[static_cast<std::size_t>(j)])) {
                                    ++edges;
                                    ++deg[static_cast<std::size_t>(i)];
                                    ++deg[static_cast<std::size_t>(j)];
                                }
                        if (edges == 5 &&
                            std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; }))
                            return false;
                    }
    return true;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: expected header \"n m\"");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::runtime_error("edge list: invalid edge endpoint");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string write_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        out << "  v" << v;
        if (!g.cells.empty()) {
            bool indep = g.cells[static_cast<std::size_t>(v)].part == Part::independent;
            out << " [shape=circle, style=" << (indep ? "solid" : "filled") << "]";
        }
        out << ";\n";
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace codegraph

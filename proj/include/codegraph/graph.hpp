#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "codegraph/code.hpp"

namespace codegraph {

enum class Part { independent, complete };

// Which realization of a code a computation refers to.
enum class Family { threshold, chain };

std::string to_string(Family f);
Family family_from_string(const std::string& s);  // throws std::invalid_argument

// Which code string and which side of it a vertex came from.
struct CellTag {
    int string_index = 0;  // 0-based index into GeneratingCode::strings
    Part part = Part::independent;
};

class DisconnectedGraph : public std::runtime_error {
public:
    explicit DisconnectedGraph(const std::string& msg) : std::runtime_error(msg) {}
};

// Simple undirected graph; vertices are 0..n-1 in construction order when the
// graph was realized from a code.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, false) {}

    int vertex_count() const { return n_; }
    long long edge_count() const;

    bool has_edge(int u, int v) const { return u != v && adj_[idx(u, v)]; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    int max_degree() const;

    std::vector<int> neighbors(int v) const;

    // BFS distances from source; unreachable vertices get -1.
    std::vector<int> distances_from(int source) const;
    bool is_connected() const;

    // Construction-order cell tags; empty when the graph was not built from a code.
    std::vector<CellTag> cells;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }
    int n_ = 0;
    std::vector<bool> adj_;
};

// All pairwise distances. Throws DisconnectedGraph if any pair is unreachable.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const {
        return d[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(v)];
    }
};

DistanceMatrix distance_matrix(const Graph& g);
int diameter(const Graph& g);

// Realization by construction order: bits are consumed left to right, a 0-bit
// adds an isolated vertex, a 1-bit adds a vertex adjacent to every vertex
// added before it.
Graph build_threshold(const GeneratingCode& code);

// Same order, but a 1-bit vertex is made adjacent to exactly the 0-bit
// vertices added before it (equivalently: the threshold realization minus all
// edges inside the set of 1-vertices).
Graph build_chain(const GeneratingCode& code);

// Membership tests by forbidden induced subgraphs.
bool recognize_threshold(const Graph& g);  // no induced P4, C4, 2K2
bool recognize_chain(const Graph& g);      // no induced 2K2, C3, C5

// Edge-list text format: first line "n m", then one "u v" per edge, 0-indexed.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

// Graphviz rendering; independent-part vertices are drawn hollow.
std::string write_dot(const Graph& g, const std::string& name = "G");

}  // namespace codegraph

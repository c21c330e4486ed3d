#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zuk/group.hpp"
#include "zuk/numeric.hpp"

namespace zuk {

// Finite simple undirected graph with ordered, labeled vertices.
class LinkGraph {
public:
    LinkGraph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::vector<int> degrees() const;
    bool has_edge(int i, int j) const;
    std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// The graph G(S): vertices are S in canonical order, an edge joins s != t
// exactly when s^-1 t lies in S. Self-loops cannot occur (e is not in S).
LinkGraph build_link_graph(const GeneratingSet& s);

// Explicit-graph mode; keeps the input vertex order. Rejects duplicate
// labels, unknown endpoints, self-loops and duplicate edges.
LinkGraph from_edge_list(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& edges);

// Breadth-first partition of the vertex indices; one block iff connected.
std::vector<std::vector<int>> connected_components(const LinkGraph& g);

// Simple-random-walk view over a graph: mu(x,y) = 1/deg(x) on edges and 0
// otherwise, nu(x) = deg(x). Only defined when every degree is >= 1.
class WalkData {
public:
    explicit WalkData(const LinkGraph& g);  // kernel_undefined_error on degree-0 vertices
    Rat mu(int x, int y) const;
    Int nu(int x) const;
    const LinkGraph& graph() const { return *g_; }

private:
    const LinkGraph* g_;
};

WalkData walk_data(const LinkGraph& g);

// Deterministic DOT export (canonical vertex and edge order, exact bytes).
std::string to_dot(const LinkGraph& g);

struct DotGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
};

// Reads the exact subset of DOT that to_dot emits.
DotGraph parse_dot(const std::string& text);

}  // namespace zuk

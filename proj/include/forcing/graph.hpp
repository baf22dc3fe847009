// graph.hpp
// Immutable undirected simple graphs, loopless multigraphs, and the
// structural predicates (cubic / claw-free / connected) the rest of the
// library is built on. Vertices are dense integers 0..n-1 throughout.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forcing/vertex_set.hpp"

namespace forcing {

enum class errc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    k_too_small,
    is_k4,
    not_claw_free_cubic,
    partition_failure,
    has_diamond_unit,
    instance_too_large,
    layering_stalled,
    not_cubic_multigraph,
    bad_parameter,
    parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

using Edge = std::pair<int, int>;

class SimpleGraph {
public:
    SimpleGraph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& neighbor_set(int v) const { return rows_[v]; }
    bool has_edge(int u, int v) const { return u != v && rows_[u].contains(v); }

    // All edges as (u,v) with u < v, sorted.
    std::vector<Edge> edges() const;

private:
    friend SimpleGraph build_graph(int n, const std::vector<Edge>& edges);
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
    std::vector<VertexSet> rows_;       // same adjacency as bit rows
};

// Validates endpoints, rejects loops and duplicate pairs.
SimpleGraph build_graph(int n, const std::vector<Edge>& edges);

bool is_cubic(const SimpleGraph& g);
// True iff no vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

struct DeletionResult {
    SimpleGraph graph;
    std::vector<int> old_to_new; // -1 for deleted vertices
    std::vector<int> new_to_old;
};

// G - X with surviving vertices compacted to 0..n-|X|-1.
DeletionResult delete_vertices(const SimpleGraph& g, const VertexSet& x);

// New graph with the given edges added; rejects loops and existing edges.
SimpleGraph add_edges(const SimpleGraph& g, const std::vector<Edge>& edges);

// Loopless undirected multigraph with edge multiplicities.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n), mult_(static_cast<std::size_t>(n) * n, 0) {}

    int vertex_count() const { return n_; }
    int multiplicity(int u, int v) const { return mult_[static_cast<std::size_t>(u) * n_ + v]; }
    void set_multiplicity(int u, int v, int m);
    void add_edge(int u, int v) { set_multiplicity(u, v, multiplicity(u, v) + 1); }

    int degree(int v) const;
    // Total number of edge instances.
    int edge_count() const;
    // Distinct adjacent vertex pairs as (u,v), u < v.
    std::vector<Edge> support() const;

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && mult_ == o.mult_; }

private:
    int n_ = 0;
    std::vector<int> mult_;
};

} // namespace forcing

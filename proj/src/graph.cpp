#include "forcing/graph.hpp"

#include <algorithm>

namespace forcing {

const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::k_too_small: return "KTooSmall";
        case errc::is_k4: return "IsK4";
        case errc::not_claw_free_cubic: return "NotClawFreeCubic";
        case errc::partition_failure: return "PartitionFailure";
        case errc::has_diamond_unit: return "HasDiamondUnit";
        case errc::instance_too_large: return "InstanceTooLarge";
        case errc::layering_stalled: return "LayeringStalled";
        case errc::not_cubic_multigraph: return "NotCubicMultigraph";
        case errc::bad_parameter: return "BadParameter";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error(errc::bad_parameter, "negative vertex count");
    SimpleGraph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::vertex_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (g.rows_[u].contains(v))
            throw Error(errc::duplicate_edge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") given twice");
        g.rows_[u].add(v);
        g.rows_[v].add(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

bool is_cubic(const SimpleGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

bool is_claw_free(const SimpleGraph& g) {
    // Scan each vertex's neighbor triples; degrees are tiny in scope.
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

bool is_connected(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::vector<int> stack{0};
    seen.add(0);
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen.contains(u)) {
                seen.add(u);
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

DeletionResult delete_vertices(const SimpleGraph& g, const VertexSet& x) {
    int n = g.vertex_count();
    if (x.universe_size() != n) throw Error(errc::bad_parameter, "vertex set universe mismatch");
    DeletionResult res;
    res.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (x.contains(v)) continue;
        res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
        res.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (res.old_to_new[u] >= 0 && res.old_to_new[v] >= 0)
            edges.emplace_back(res.old_to_new[u], res.old_to_new[v]);
    res.graph = build_graph(static_cast<int>(res.new_to_old.size()), edges);
    return res;
}

SimpleGraph add_edges(const SimpleGraph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> edges = g.edges();
    int n = g.vertex_count();
    for (auto [u, v] : extra) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::vertex_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw Error(errc::duplicate_edge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges); // build_graph catches duplicates within `extra` itself
}

void Multigraph::set_multiplicity(int u, int v, int m) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw Error(errc::vertex_out_of_range, "multigraph pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw Error(errc::loop_edge, "multigraph loop at " + std::to_string(u));
    if (m < 0) throw Error(errc::bad_parameter, "negative multiplicity");
    mult_[static_cast<std::size_t>(u) * n_ + v] = m;
    mult_[static_cast<std::size_t>(v) * n_ + u] = m;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += multiplicity(v, u);
    return d;
}

int Multigraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<Edge> Multigraph::support() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (multiplicity(u, v) > 0) out.emplace_back(u, v);
    return out;
}

} // namespace forcing

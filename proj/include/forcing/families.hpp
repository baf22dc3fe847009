// families.hpp
// Deterministic generators: diamond-necklaces N_k, the prism, triangle
// expansions of cubic multigraphs, exhaustive small cubic-multigraph
// enumeration, and the fixed graphs transcribed from figures.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

// Canonical N_k layout: diamond i (1-based) occupies vertices
// 4(i-1)..4(i-1)+3 as a_i, b_i, c_i, d_i; a_i b_i is the missing edge;
// link edges a_i b_{i+1} for i in [k-1] plus a_k b_1.
struct NecklaceLayout {
    int k = 0;
    int a(int i) const { return 4 * (i - 1); }
    int b(int i) const { return 4 * (i - 1) + 1; }
    int c(int i) const { return 4 * (i - 1) + 2; }
    int d(int i) const { return 4 * (i - 1) + 3; }
};

struct NecklaceGraph {
    SimpleGraph graph;
    NecklaceLayout layout;
};

// Diamond-necklace with k diamonds (4k vertices); k >= 2.
NecklaceGraph diamond_necklace(int k);

// C_3 box K_2: triangles {0,1,2} and {3,4,5} joined by the matching
// 0-3, 1-4, 2-5.
SimpleGraph prism();

// Port assignment for triangle_expansion: for each multigraph vertex, a
// permutation of {0,1,2} sending its i-th incident edge instance (in
// (neighbor, instance) order) to a triangle corner.
using PortAssignment = std::vector<std::array<int, 3>>;

struct ExpansionResult {
    SimpleGraph graph;
    // multigraph vertex u -> its triangle {3u, 3u+1, 3u+2}
    std::vector<std::array<int, 3>> unit_vertices;
};

// Replaces every multigraph vertex by a triangle and every edge instance
// by one G-edge between assigned corners. Requires M cubic and loopless.
ExpansionResult triangle_expansion(const Multigraph& m, const std::optional<PortAssignment>& ports = {});

// All loopless cubic multigraphs on n vertices up to isomorphism
// (including disconnected ones); 2 <= n <= 8. Odd n yields none.
std::vector<Multigraph> enumerate_cubic_multigraphs(int n);

// Permutation brute force; fine for the <= 8 vertices in scope.
bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b);

struct NamedGraph {
    SimpleGraph graph;
    std::map<std::string, int> names;
    int vertex(const std::string& name) const { return names.at(name); }
};

// Ring of ell triangle-units (ell even, >= 4) whose free vertices pair
// up: units T_1..T_ell with cycle edges v_{i2} v_{i+1,1} and free-vertex
// edges v_{2i-1,3} v_{2i,3}. Names "v{i}{j}".
NamedGraph paper_graph_fig4(int ell);
// The order-10 graph with one diamond-unit and two triangle-units.
NamedGraph paper_graph_fig7();
// The order-14 graph with two diamond-units and two triangle-units.
NamedGraph paper_graph_fig9();

} // namespace forcing

// structure.hpp
// Structural decomposition of connected claw-free cubic graphs: the
// unique triangle-diamond partition, the contraction multigraph over
// triangle-units, optimal vertex-disjoint cycle collections (2-cycles
// allowed through parallel edges), and the layering derived from one.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

enum class UnitKind { triangle, diamond };

struct Unit {
    UnitKind kind;
    std::vector<int> vertices;         // sorted; 3 for triangle, 4 for diamond
    std::array<int, 2> missing_pair{-1, -1}; // diamond: endpoints of the absent edge
};

struct DeltaDPartition {
    std::vector<Unit> units;         // sorted by smallest vertex
    std::vector<int> vertex_to_unit; // unit index per vertex

    bool all_triangles() const {
        for (const auto& u : units)
            if (u.kind == UnitKind::diamond) return false;
        return true;
    }
    int diamond_count() const {
        int c = 0;
        for (const auto& u : units) c += u.kind == UnitKind::diamond;
        return c;
    }
};

// The unique partition of V(G) into triangle-units and diamond-units.
// Requires G connected, claw-free, cubic and G != K_4.
DeltaDPartition triangle_diamond_partition(const SimpleGraph& g);

// Contraction multigraph M_G: vertex i corresponds to unit i of the
// partition; multiplicity = number of G-edges between the two units.
// Requires every unit to be a triangle-unit; the result is cubic.
Multigraph contraction_multigraph(const SimpleGraph& g, const DeltaDPartition& p);

// A cycle in a multigraph: distinct vertices in cyclic order, plus the
// parallel-edge instance used for each hop (hop i joins vertices[i] and
// vertices[(i+1) % len]). A 2-cycle uses two distinct instances.
struct MultiCycle {
    std::vector<int> vertices;
    std::vector<int> instances;
    int length() const { return static_cast<int>(vertices.size()); }
};

struct CycleCover {
    std::vector<MultiCycle> cycles;
    VertexSet covered;
};

// Among all collections of vertex-disjoint cycles: maximizes covered
// vertices, then the number of cycles; ties broken lexicographically on
// the sorted per-cycle vertex lists. Exhaustive; requires |V| <= 12.
CycleCover optimal_cycle_collection(const Multigraph& m);

struct Layering {
    std::vector<VertexSet> layers; // S_1 = covered; S_{i+1} joined to earlier layers by >= 2 edges
};

// Repeats the >=2-edges rule until all vertices are layered; throws
// LayeringStalled if a layer comes up empty while vertices remain
// (which would contradict optimality of the collection).
Layering compute_layering(const Multigraph& m, const CycleCover& cover);

// Partition JSON schema:
//   {"units": [{"kind": "triangle"|"diamond", "vertices": [...], "missing_pair": [a,b]|null}]}
std::string partition_to_json(const DeltaDPartition& p);
DeltaDPartition partition_from_json(const std::string& text, int n);

} // namespace forcing

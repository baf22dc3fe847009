// builders.hpp
// Constructive total-forcing-set builders: the explicit necklace sets,
// the cycle-coloring construction for graphs with a spanning 2-factor of
// triangles, and the inductive diamond/triangle reductions for general
// connected claw-free cubic graphs. Every returned certificate is
// engine-verified before it leaves the module.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "forcing/families.hpp"
#include "forcing/forcing.hpp"
#include "forcing/graph.hpp"
#include "forcing/structure.hpp"

namespace forcing {

struct TFCertificate {
    VertexSet set;
    ForcingTrace trace; // closure trace from `set`
    int size = 0;
    int n = 0;
    bool meets_bound = false; // size <= n/2, exact arithmetic
    bool is_valid = false;    // passed is_total_forcing_set
    std::string provenance;   // which construction produced it
};

// Explicit sets over the canonical N_k labeling.
// {a_2..a_k} u {c_1..c_k} u {b_1}: a TF-set of size 2k.
VertexSet necklace_tfset(int k);
// {c_1..c_k} u {b_1, a_k}: a forcing set of size k+2 (not total); the
// two non-C vertices are the endpoints of the closing link edge.
VertexSet necklace_forcing_set(int k);

// Lift of one multigraph cycle into G plus the parity coloring: even
// cycles color every other triangle-unit whole; odd cycles color four
// vertices of the first two units and then every other unit whole.
struct CycleColoring {
    MultiCycle cycle;                      // in M_G
    std::vector<std::array<int, 3>> labels; // per unit on the cycle: {v_i1, v_i2, free v_i3}
    VertexSet colored;                     // S_C; n_C/2 vertices (even) or (n_C-1)/2 (odd)
};
CycleColoring color_cycle(const SimpleGraph& g, const DeltaDPartition& p, const MultiCycle& cycle);

// Theorem-1 construction: contraction multigraph, optimal cycle
// collection, per-cycle coloring. Size <= n/2 guaranteed.
TFCertificate tfset_triangle_factor(const SimpleGraph& g);

// Theorem-2 construction for any connected claw-free cubic G != K_4:
// dispatches to the necklace set, the triangle-factor construction, the
// diamond reduction (with its order-10 exceptional graph), or the
// triangle reduction (with its order-14 exceptional graph); falls back
// to the exact solver if a case verification ever fails.
TFCertificate tfset_clawfree(const SimpleGraph& g);

enum class Family { k4, prism, necklace, other };

struct FamilyTag {
    Family family = Family::other;
    int k = 0; // diamond count for necklaces
    std::string label() const;
    bool operator==(const FamilyTag&) const = default;
};

// Fingerprint recognition: K_4 by order, the prism by its two
// triangle-units, necklaces by an all-diamond partition.
FamilyTag recognize_family(const SimpleGraph& g);

// Certificate JSON schema:
//   {"set": [int], "size": int, "n": int, "meets_half_bound": bool,
//    "provenance": string, "trace": {...}}
std::string certificate_to_json(const TFCertificate& c);
TFCertificate certificate_from_json(const std::string& text);

} // namespace forcing

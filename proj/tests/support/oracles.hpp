// oracles.hpp
// Test-only reference implementations, deliberately independent of the
// library's production paths: rescan-based closures with pluggable force
// order, plain enumeration solvers, brute-force claw detection,
// exhaustive partition counting, naive cycle-collection optimization,
// and backtracking graph isomorphism.
#pragma once

#include <random>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/structure.hpp"
#include "forcing/vertex_set.hpp"

namespace forcing::test {

enum class ForcePolicy { lowest, highest, random };

// Full-rescan closure; the chosen (forcer, forced) pair per step follows
// the policy. Returns the final colored set only.
VertexSet naive_closure(const SimpleGraph& g, const VertexSet& start, ForcePolicy policy,
                        std::mt19937* rng = nullptr);

bool naive_is_forcing(const SimpleGraph& g, const VertexSet& start);
bool naive_isolate_free(const SimpleGraph& g, const VertexSet& s);

struct NaiveSolve {
    int value = 0;
    VertexSet witness; // lexicographically first at the optimal cardinality
};
NaiveSolve naive_forcing_number(const SimpleGraph& g);
NaiveSolve naive_total_forcing_number(const SimpleGraph& g);
// True iff some k-subset (isolate-free when total=true) forces the graph.
bool naive_has_witness(const SimpleGraph& g, int k, bool total);

// Induced-K_{1,3} search over all 4-subsets.
bool brute_force_has_claw(const SimpleGraph& g);

// Number of partitions of V into cells inducing a triangle or a diamond.
long long count_triangle_diamond_partitions(const SimpleGraph& g);

struct CollectionScore {
    int covered = 0;
    int cycle_count = 0;
    std::vector<std::vector<int>> sorted_lists; // sorted vertex list per cycle, sorted
    bool operator==(const CollectionScore&) const = default;
};
// Enumerate-all-collections oracle over subset-hamiltonicity cycles.
CollectionScore naive_best_cycle_collection(const Multigraph& m);
CollectionScore score_of(const CycleCover& cover);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph random_graph(std::mt19937& rng, int n, double p);
VertexSet random_subset(std::mt19937& rng, int n);

// Replays a trace step by step, checking each step's legality (forcer
// colored, forced its unique uncolored neighbor); returns the final set.
VertexSet replay_trace(const SimpleGraph& g, const VertexSet& start,
                       const std::vector<std::pair<int, int>>& steps);

} // namespace forcing::test

// forcing.hpp
// The dynamic coloring (forcing) process: a colored vertex with exactly
// one non-colored neighbor forces that neighbor. Closure computation,
// reproducible traces, and forcing-set / total-forcing-set predicates.
#pragma once

#include <string>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/vertex_set.hpp"

namespace forcing {

struct ForcingStep {
    int forcer;
    int forced;
    bool operator==(const ForcingStep&) const = default;
};

struct ForcingTrace {
    std::vector<ForcingStep> steps;
    bool operator==(const ForcingTrace&) const = default;
};

struct ClosureResult {
    VertexSet colored;  // final colored set
    ForcingTrace trace; // one entry per forced vertex, in play order
    bool complete = false;
};

// Applies the forcing rule until it stalls. Deterministic: at each step
// the valid pair with the smallest forcer index (then smallest forced
// index) is played. One force per step.
ClosureResult forcing_closure(const SimpleGraph& g, const VertexSet& start);

bool is_forcing_set(const SimpleGraph& g, const VertexSet& s);
// Every member of s has a neighbor in s.
bool is_isolate_free_in(const SimpleGraph& g, const VertexSet& s);
// Forcing set whose induced subgraph has no isolated vertex.
bool is_total_forcing_set(const SimpleGraph& g, const VertexSet& s);

// Reusable closure engine for the solver's inner loop: no allocation per
// run once constructed for a graph.
class ClosureEngine {
public:
    explicit ClosureEngine(const SimpleGraph& g);

    // Runs the closure from `start`; returns true iff all vertices end
    // colored. Optionally records the trace (allocates only then).
    bool run(const VertexSet& start, ForcingTrace* trace = nullptr);
    const VertexSet& colored() const { return colored_; }

private:
    const SimpleGraph& g_;
    VertexSet colored_;
    VertexSet can_force_;
    std::vector<int> uncolored_deg_;
};

// Trace JSON schema:
//   {"n": int, "initial": [int], "steps": [[forcer,forced],...], "complete": bool}
std::string trace_to_json(int n, const VertexSet& initial, const ClosureResult& result);

struct TraceDocument {
    int n = 0;
    VertexSet initial;
    ClosureResult result;
};
TraceDocument trace_from_json(const std::string& text);

} // namespace forcing

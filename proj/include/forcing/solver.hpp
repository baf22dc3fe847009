// solver.hpp
// Exact minimum forcing-number and total-forcing-number computation by
// cardinality-staged exhaustive search: k-subsets are enumerated in
// lexicographic order for k = 1, 2, ... until a witness appears, so the
// first success is both minimum-cardinality and lexicographically least.
#pragma once

#include <cstdint>
#include <string>

#include "forcing/forcing.hpp"
#include "forcing/graph.hpp"

namespace forcing {

struct SolveOptions {
    // 0 = take FORCING_LAB_WORKERS from the environment, default 1.
    int workers = 0;
    // Lift the soft instance limit.
    bool force = false;
    int soft_limit = 24;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;       // lexicographically smallest optimal set
    ForcingTrace trace;      // closure trace of the witness
    std::uint64_t subsets_tested = 0; // candidates enumerated by a canonical sequential run

    bool operator==(const SolveResult& o) const {
        return value == o.value && witness == o.witness && trace == o.trace &&
               subsets_tested == o.subsets_tested;
    }
};

// F(G). Throws InstanceTooLarge past the soft limit unless forced.
SolveResult forcing_number(const SimpleGraph& g, const SolveOptions& opts = {});

// F_t(G): only subsets whose induced subgraph is isolate-free are
// closure-tested. Requires n >= 2 and no isolated vertices.
SolveResult total_forcing_number(const SimpleGraph& g, const SolveOptions& opts = {});

struct Observation1Result {
    int forcing = 0;
    int total_forcing = 0;
    bool holds = false; // F <= F_t <= 2F
};
Observation1Result verify_observation1(const SimpleGraph& g, const SolveOptions& opts = {});

// SolveResult JSON schema: {"value": int, "witness": [int], "subsets_tested": int}
std::string solve_result_to_json(const SolveResult& r);
SolveResult solve_result_from_json(const std::string& text, int n);

int resolve_workers(const SolveOptions& opts);

} // namespace forcing

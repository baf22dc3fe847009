#include "forcing/forcing.hpp"

#include <json.hpp>

namespace forcing {

ClosureEngine::ClosureEngine(const SimpleGraph& g)
    : g_(g), colored_(g.vertex_count()), can_force_(g.vertex_count()), uncolored_deg_(g.vertex_count(), 0) {}

bool ClosureEngine::run(const VertexSet& start, ForcingTrace* trace) {
    int n = g_.vertex_count();
    colored_ = start;
    can_force_.clear();
    if (trace) trace->steps.clear();
    for (int v = 0; v < n; ++v) {
        int ud = g_.degree(v) - (g_.neighbor_set(v) & start).count();
        uncolored_deg_[v] = ud;
        if (ud == 1 && colored_.contains(v)) can_force_.add(v);
    }
    int colored_count = colored_.count();
    while (true) {
        int forcer = can_force_.first();
        if (forcer < 0) break;
        int forced = (g_.neighbor_set(forcer) - colored_).first();
        colored_.add(forced);
        ++colored_count;
        if (trace) trace->steps.push_back({forcer, forced});
        // the forced vertex's neighborhood is the only place counts change
        for (int u : g_.neighbors(forced)) {
            if (--uncolored_deg_[u] == 1) {
                if (colored_.contains(u)) can_force_.add(u);
            } else if (can_force_.contains(u)) {
                can_force_.remove(u);
            }
        }
        if (uncolored_deg_[forced] == 1) can_force_.add(forced);
    }
    return colored_count == n;
}

ClosureResult forcing_closure(const SimpleGraph& g, const VertexSet& start) {
    ClosureEngine engine(g);
    ClosureResult res;
    res.complete = engine.run(start, &res.trace);
    res.colored = engine.colored();
    return res;
}

bool is_forcing_set(const SimpleGraph& g, const VertexSet& s) {
    ClosureEngine engine(g);
    return engine.run(s);
}

bool is_isolate_free_in(const SimpleGraph& g, const VertexSet& s) {
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (!g.neighbor_set(v).intersects(s)) return false;
    return true;
}

bool is_total_forcing_set(const SimpleGraph& g, const VertexSet& s) {
    return is_isolate_free_in(g, s) && is_forcing_set(g, s);
}

std::string trace_to_json(int n, const VertexSet& initial, const ClosureResult& result) {
    nlohmann::json j;
    j["n"] = n;
    j["initial"] = initial.to_indices();
    auto steps = nlohmann::json::array();
    for (const auto& st : result.trace.steps) steps.push_back({st.forcer, st.forced});
    j["steps"] = steps;
    j["complete"] = result.complete;
    return j.dump();
}

TraceDocument trace_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("trace json: ") + e.what());
    }
    TraceDocument doc;
    try {
        doc.n = j.at("n").get<int>();
        doc.initial = VertexSet::from_indices(doc.n, j.at("initial").get<std::vector<int>>());
        doc.result.colored = doc.initial;
        for (const auto& st : j.at("steps")) {
            ForcingStep step{st.at(0).get<int>(), st.at(1).get<int>()};
            doc.result.trace.steps.push_back(step);
            doc.result.colored.add(step.forced);
        }
        doc.result.complete = j.at("complete").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("trace json: ") + e.what());
    }
    return doc;
}

} // namespace forcing

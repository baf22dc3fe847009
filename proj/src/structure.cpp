#include "forcing/structure.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <json.hpp>

namespace forcing {

namespace {

bool is_k4(const SimpleGraph& g) {
    return g.vertex_count() == 4 && g.edge_count() == 6;
}

std::vector<std::array<int, 3>> all_triangles(const SimpleGraph& g) {
    std::vector<std::array<int, 3>> tris;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            VertexSet common = g.neighbor_set(u) & g.neighbor_set(v);
            for (int w = common.next(v); w >= 0; w = common.next(w)) tris.push_back({u, v, w});
        }
    return tris;
}

int induced_edge_count(const SimpleGraph& g, const std::vector<int>& verts) {
    int c = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) ++c;
    return c;
}

} // namespace

DeltaDPartition triangle_diamond_partition(const SimpleGraph& g) {
    if (is_k4(g)) throw Error(errc::is_k4, "the triangle-diamond partition is undefined for K_4");
    if (!is_cubic(g) || !is_claw_free(g))
        throw Error(errc::not_claw_free_cubic, "input must be claw-free and cubic");
    if (!is_connected(g)) throw Error(errc::not_claw_free_cubic, "input must be connected");

    auto tris = all_triangles(g);
    int n = g.vertex_count();

    // Two triangles sharing an edge merge into a diamond-unit; the rest
    // stand alone. Any overlap beyond that violates the preconditions.
    std::vector<bool> used(tris.size(), false);
    DeltaDPartition part;
    part.vertex_to_unit.assign(n, -1);

    auto claim = [&](int v, int unit) {
        if (part.vertex_to_unit[v] != -1)
            throw Error(errc::partition_failure, "vertex " + std::to_string(v) + " claimed by two units");
        part.vertex_to_unit[v] = unit;
    };

    for (std::size_t i = 0; i < tris.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        int partner = -1;
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            if (used[j]) continue;
            int shared = 0;
            for (int a : tris[i])
                for (int b : tris[j]) shared += a == b;
            if (shared == 2) {
                if (partner != -1)
                    throw Error(errc::partition_failure, "triangle pairs with two partners");
                partner = static_cast<int>(j);
            }
        }
        Unit unit;
        int idx = static_cast<int>(part.units.size());
        if (partner >= 0) {
            used[partner] = true;
            std::vector<int> verts(tris[i].begin(), tris[i].end());
            // missing pair = the two vertices outside the shared edge
            std::array<int, 2> missing{-1, -1};
            for (int b : tris[partner])
                if (std::find(verts.begin(), verts.end(), b) == verts.end()) {
                    verts.push_back(b);
                    missing[1] = b;
                }
            for (int a : tris[i]) {
                bool shared = false;
                for (int b : tris[partner]) shared |= a == b;
                if (!shared) missing[0] = a;
            }
            std::sort(verts.begin(), verts.end());
            if (missing[0] > missing[1]) std::swap(missing[0], missing[1]);
            if (verts.size() != 4 || induced_edge_count(g, verts) != 5)
                throw Error(errc::partition_failure, "merged triangles do not induce a diamond");
            unit = Unit{UnitKind::diamond, verts, missing};
        } else {
            std::vector<int> verts(tris[i].begin(), tris[i].end());
            unit = Unit{UnitKind::triangle, verts, {-1, -1}};
        }
        for (int v : unit.vertices) claim(v, idx);
        part.units.push_back(std::move(unit));
    }

    for (int v = 0; v < n; ++v)
        if (part.vertex_to_unit[v] == -1)
            throw Error(errc::partition_failure, "vertex " + std::to_string(v) + " lies in no triangle");

    std::sort(part.units.begin(), part.units.end(),
              [](const Unit& a, const Unit& b) { return a.vertices[0] < b.vertices[0]; });
    for (std::size_t i = 0; i < part.units.size(); ++i)
        for (int v : part.units[i].vertices) part.vertex_to_unit[v] = static_cast<int>(i);
    return part;
}

Multigraph contraction_multigraph(const SimpleGraph& g, const DeltaDPartition& p) {
    for (const auto& u : p.units)
        if (u.kind == UnitKind::diamond)
            throw Error(errc::has_diamond_unit, "contraction requires a spanning 2-factor of triangles");
    Multigraph m(static_cast<int>(p.units.size()));
    for (auto [u, v] : g.edges()) {
        int cu = p.vertex_to_unit[u], cv = p.vertex_to_unit[v];
        if (cu != cv) m.add_edge(cu, cv);
    }
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.degree(v) != 3)
            throw Error(errc::partition_failure, "contraction multigraph is not cubic");
    return m;
}

namespace {

// Cycle carriers as vertex bitmasks (|V| <= 12 fits easily).
using Mask = std::uint32_t;

std::vector<Mask> cycle_vertex_sets(const Multigraph& m) {
    int n = m.vertex_count();
    std::unordered_set<Mask> seen;
    std::vector<Mask> out;
    auto emit = [&](Mask mask) {
        if (seen.insert(mask).second) out.push_back(mask);
    };
    // 2-cycles need two parallel edge instances
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m.multiplicity(u, v) >= 2) emit((Mask{1} << u) | (Mask{1} << v));
    // longer cycles: DFS paths anchored at their smallest vertex
    std::vector<int> path;
    auto dfs = [&](auto&& self, int anchor, int last, Mask mask) -> void {
        if (static_cast<int>(path.size()) >= 3 && m.multiplicity(last, anchor) >= 1)
            if (path[1] < path.back()) emit(mask); // one orientation only
        for (int next = anchor + 1; next < n; ++next) {
            if (mask & (Mask{1} << next)) continue;
            if (m.multiplicity(last, next) == 0) continue;
            path.push_back(next);
            self(self, anchor, next, mask | (Mask{1} << next));
            path.pop_back();
        }
    };
    for (int a = 0; a < n; ++a) {
        path = {a};
        dfs(dfs, a, a, Mask{1} << a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> sorted_cycle_lists(const std::vector<Mask>& cycles) {
    std::vector<std::vector<int>> lists;
    for (Mask c : cycles) {
        std::vector<int> vs;
        for (int v = 0; v < 32; ++v)
            if (c & (Mask{1} << v)) vs.push_back(v);
        lists.push_back(std::move(vs));
    }
    std::sort(lists.begin(), lists.end());
    return lists;
}

// (covered, count, lex) comparison: true when `a` beats `b`.
bool collection_better(int cov_a, const std::vector<Mask>& a, int cov_b, const std::vector<Mask>& b) {
    if (cov_a != cov_b) return cov_a > cov_b;
    if (a.size() != b.size()) return a.size() > b.size();
    return sorted_cycle_lists(a) < sorted_cycle_lists(b);
}

// Lex-smallest closed vertex sequence realizing the cycle on `verts`.
MultiCycle materialize_cycle(const Multigraph& m, const std::vector<int>& verts) {
    MultiCycle cyc;
    if (verts.size() == 2) {
        cyc.vertices = verts;
        cyc.instances = {0, 1}; // two distinct parallel instances
        return cyc;
    }
    std::vector<int> seq{verts[0]};
    std::vector<bool> used(verts.size(), false);
    used[0] = true;
    auto dfs = [&](auto&& self) -> bool {
        if (seq.size() == verts.size())
            return m.multiplicity(seq.back(), verts[0]) >= 1;
        for (std::size_t i = 1; i < verts.size(); ++i) {
            if (used[i] || m.multiplicity(seq.back(), verts[i]) == 0) continue;
            used[i] = true;
            seq.push_back(verts[i]);
            if (self(self)) return true;
            seq.pop_back();
            used[i] = false;
        }
        return false;
    };
    if (!dfs(dfs)) throw Error(errc::partition_failure, "cycle set lost its hamiltonian cycle");
    cyc.vertices = seq;
    cyc.instances.assign(verts.size(), 0);
    return cyc;
}

} // namespace

CycleCover optimal_cycle_collection(const Multigraph& m) {
    int n = m.vertex_count();
    if (n > 12) throw Error(errc::instance_too_large, "cycle packing limited to 12 multigraph vertices");
    auto cycles = cycle_vertex_sets(m);

    // index cycles by their lowest vertex for the branching below
    std::vector<std::vector<Mask>> by_low(n);
    for (Mask c : cycles) {
        int low = std::countr_zero(c);
        by_low[low].push_back(c);
    }

    std::vector<Mask> current, best;
    int best_covered = -1;
    bool have_best = false;

    // Decide vertices lowest-first: either leave v uncovered or pick a
    // cycle through v disjoint from everything chosen so far.
    auto search = [&](auto&& self, int v, Mask covered, int covered_count) -> void {
        while (v < n && (covered & (Mask{1} << v))) ++v;
        if (v == n) {
            if (!have_best || collection_better(covered_count, current, best_covered, best)) {
                have_best = true;
                best = current;
                best_covered = covered_count;
            }
            return;
        }
        if (covered_count + (n - v) < best_covered) return; // cannot beat best coverage
        for (Mask c : by_low[v]) {
            if (c & covered) continue;
            current.push_back(c);
            self(self, v + 1, covered | c, covered_count + std::popcount(c));
            current.pop_back();
        }
        self(self, v + 1, covered, covered_count); // v stays uncovered
    };
    search(search, 0, 0, 0);

    CycleCover cover;
    cover.covered = VertexSet(n);
    auto lists = sorted_cycle_lists(best);
    for (const auto& vs : lists) {
        cover.cycles.push_back(materialize_cycle(m, vs));
        for (int v : vs) cover.covered.add(v);
    }
    return cover;
}

Layering compute_layering(const Multigraph& m, const CycleCover& cover) {
    int n = m.vertex_count();
    Layering out;
    VertexSet reached = cover.covered;
    out.layers.push_back(cover.covered);
    while (reached.count() < n) {
        VertexSet next(n);
        for (int v = 0; v < n; ++v) {
            if (reached.contains(v)) continue;
            int joins = 0;
            for (int u = reached.first(); u >= 0; u = reached.next(u)) joins += m.multiplicity(v, u);
            if (joins >= 2) next.add(v);
        }
        if (next.empty())
            throw Error(errc::layering_stalled,
                        "no vertex joined to earlier layers by two edges; collection was not optimal");
        reached |= next;
        out.layers.push_back(std::move(next));
    }
    return out;
}

std::string partition_to_json(const DeltaDPartition& p) {
    nlohmann::json units = nlohmann::json::array();
    for (const auto& u : p.units) {
        nlohmann::json ju;
        ju["kind"] = u.kind == UnitKind::triangle ? "triangle" : "diamond";
        ju["vertices"] = u.vertices;
        if (u.kind == UnitKind::diamond)
            ju["missing_pair"] = {u.missing_pair[0], u.missing_pair[1]};
        else
            ju["missing_pair"] = nullptr;
        units.push_back(ju);
    }
    return nlohmann::json{{"units", units}}.dump();
}

DeltaDPartition partition_from_json(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("partition json: ") + e.what());
    }
    DeltaDPartition p;
    p.vertex_to_unit.assign(n, -1);
    try {
        for (const auto& ju : j.at("units")) {
            Unit u;
            u.kind = ju.at("kind").get<std::string>() == "diamond" ? UnitKind::diamond : UnitKind::triangle;
            u.vertices = ju.at("vertices").get<std::vector<int>>();
            if (!ju.at("missing_pair").is_null()) {
                u.missing_pair[0] = ju.at("missing_pair").at(0).get<int>();
                u.missing_pair[1] = ju.at("missing_pair").at(1).get<int>();
            }
            int idx = static_cast<int>(p.units.size());
            for (int v : u.vertices) {
                if (v < 0 || v >= n) throw Error(errc::parse_error, "partition json: vertex out of range");
                p.vertex_to_unit[v] = idx;
            }
            p.units.push_back(std::move(u));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("partition json: ") + e.what());
    }
    return p;
}

} // namespace forcing

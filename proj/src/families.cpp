#include "forcing/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace forcing {

NecklaceGraph diamond_necklace(int k) {
    if (k < 2) throw Error(errc::k_too_small, "necklaces need k >= 2 diamonds");
    NecklaceLayout lay{k};
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) {
        int a = lay.a(i), b = lay.b(i), c = lay.c(i), d = lay.d(i);
        edges.insert(edges.end(), {{a, c}, {a, d}, {b, c}, {b, d}, {c, d}});
    }
    for (int i = 1; i < k; ++i) edges.emplace_back(lay.a(i), lay.b(i + 1));
    edges.emplace_back(lay.a(k), lay.b(1));
    return {build_graph(4 * k, edges), lay};
}

SimpleGraph prism() {
    return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

namespace {

struct Incidence {
    int other;
    int index; // parallel-instance index within the (v, other) bundle
};

std::vector<std::vector<Incidence>> incidences(const Multigraph& m) {
    std::vector<std::vector<Incidence>> inc(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v)
        for (int u = 0; u < m.vertex_count(); ++u)
            for (int idx = 0; idx < m.multiplicity(v, u); ++idx) inc[v].push_back({u, idx});
    return inc;
}

} // namespace

ExpansionResult triangle_expansion(const Multigraph& m, const std::optional<PortAssignment>& ports) {
    int n = m.vertex_count();
    for (int v = 0; v < n; ++v)
        if (m.degree(v) != 3)
            throw Error(errc::not_cubic_multigraph, "vertex " + std::to_string(v) + " has degree != 3");
    if (ports) {
        if (static_cast<int>(ports->size()) != n)
            throw Error(errc::bad_parameter, "port assignment size mismatch");
        for (const auto& p : *ports) {
            auto sorted = p;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != std::array<int, 3>{0, 1, 2})
                throw Error(errc::bad_parameter, "port assignment must permute {0,1,2}");
        }
    }

    auto inc = incidences(m);
    auto corner_of = [&](int v, int slot) {
        int c = ports ? (*ports)[v][slot] : slot;
        return 3 * v + c;
    };

    ExpansionResult res;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        res.unit_vertices.push_back({3 * v, 3 * v + 1, 3 * v + 2});
        edges.insert(edges.end(), {{3 * v, 3 * v + 1}, {3 * v, 3 * v + 2}, {3 * v + 1, 3 * v + 2}});
    }
    for (int u = 0; u < n; ++u)
        for (int slot = 0; slot < 3; ++slot) {
            auto [w, idx] = inc[u][slot];
            if (w < u) continue; // emit each instance once, from its lower endpoint
            // matching slot on the other side
            int wslot = -1;
            for (int s = 0; s < 3; ++s)
                if (inc[w][s].other == u && inc[w][s].index == idx) wslot = s;
            edges.emplace_back(corner_of(u, slot), corner_of(w, wslot));
        }
    res.graph = build_graph(3 * n, edges);
    return res;
}

namespace {

std::vector<int> upper_triangle(const Multigraph& m) {
    std::vector<int> flat;
    for (int u = 0; u < m.vertex_count(); ++u)
        for (int v = u + 1; v < m.vertex_count(); ++v) flat.push_back(m.multiplicity(u, v));
    return flat;
}

// Minimum upper-triangle vector over all vertex permutations.
std::vector<int> canonical_form(const Multigraph& m) {
    int n = m.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = upper_triangle(m);
    std::vector<int> cur(best.size());
    do {
        bool smaller = false, larger = false;
        std::size_t pos = 0;
        for (int u = 0; u < n && !larger; ++u)
            for (int v = u + 1; v < n; ++v) {
                int val = m.multiplicity(perm[u], perm[v]);
                cur[pos] = val;
                if (!smaller && val > best[pos]) {
                    larger = true;
                    break;
                }
                if (val < best[pos]) smaller = true;
                ++pos;
            }
        if (!larger && smaller) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<Multigraph> enumerate_cubic_multigraphs(int n) {
    if (n < 2 || n > 8) throw Error(errc::instance_too_large, "multigraph enumeration covers 2 <= n <= 8");
    std::vector<Multigraph> out;
    if (n * 3 % 2 != 0) return out; // odd degree sum

    std::set<std::vector<int>> seen;
    std::vector<int> rem(n, 3);
    Multigraph m(n);

    // fill the upper triangle pair by pair, respecting remaining degrees
    auto rec = [&](auto&& self, int u, int v) -> void {
        if (u == n) {
            if (seen.insert(canonical_form(m)).second) out.push_back(m);
            return;
        }
        if (v == n) {
            if (rem[u] == 0) self(self, u + 1, u + 2);
            return;
        }
        int cap = std::min({rem[u], rem[v], 3});
        // the last pair of row u must absorb the whole remaining degree
        for (int mult = 0; mult <= cap; ++mult) {
            if (v == n - 1 && mult != rem[u]) continue;
            m.set_multiplicity(u, v, mult);
            rem[u] -= mult;
            rem[v] -= mult;
            self(self, u, v + 1);
            rem[u] += mult;
            rem[v] += mult;
            m.set_multiplicity(u, v, 0);
        }
    };
    rec(rec, 0, 1);
    return out;
}

bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count()) return false;
    if (n > 8) throw Error(errc::instance_too_large, "multigraph isomorphism covers n <= 8");
    auto degs = [&](const Multigraph& m) {
        std::vector<int> d(m.vertex_count());
        for (int v = 0; v < m.vertex_count(); ++v) d[v] = m.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a.multiplicity(u, v) != b.multiplicity(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

NamedGraph paper_graph_fig4(int ell) {
    if (ell < 4 || ell % 2 != 0) throw Error(errc::bad_parameter, "fig4 needs an even ring length >= 4");
    NamedGraph g;
    auto v = [&](int i, int j) { return 3 * (i - 1) + (j - 1); }; // unit i in [ell], corner j in [3]
    std::vector<Edge> edges;
    for (int i = 1; i <= ell; ++i) {
        edges.insert(edges.end(), {{v(i, 1), v(i, 2)}, {v(i, 1), v(i, 3)}, {v(i, 2), v(i, 3)}});
        int next = i % ell + 1;
        edges.emplace_back(v(i, 2), v(next, 1));
        for (int j = 1; j <= 3; ++j)
            g.names["v" + std::to_string(i) + std::to_string(j)] = v(i, j);
    }
    for (int i = 1; i <= ell / 2; ++i) edges.emplace_back(v(2 * i - 1, 3), v(2 * i, 3));
    g.graph = build_graph(3 * ell, edges);
    return g;
}

NamedGraph paper_graph_fig7() {
    NamedGraph g;
    const char* names[] = {"a", "b", "c", "d", "e", "f", "e1", "e2", "f1", "f2"};
    for (int i = 0; i < 10; ++i) g.names[names[i]] = i;
    auto at = [&](const char* s) { return g.names[s]; };
    std::vector<Edge> edges = {
        {at("a"), at("c")}, {at("a"), at("d")}, {at("b"), at("c")}, {at("b"), at("d")}, {at("c"), at("d")},
        {at("a"), at("e")}, {at("b"), at("f")},
        {at("e"), at("e1")}, {at("e"), at("e2")}, {at("e1"), at("e2")},
        {at("f"), at("f1")}, {at("f"), at("f2")}, {at("f1"), at("f2")},
        {at("e1"), at("f1")}, {at("e2"), at("f2")},
    };
    g.graph = build_graph(10, edges);
    return g;
}

NamedGraph paper_graph_fig9() {
    NamedGraph g;
    const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "p"};
    for (int i = 0; i < 14; ++i) g.names[names[i]] = i;
    auto at = [&](const char* s) { return g.names[s]; };
    std::vector<Edge> edges = {
        {at("a"), at("c")}, {at("a"), at("d")}, {at("b"), at("c")}, {at("b"), at("d")}, {at("c"), at("d")},
        {at("a"), at("e")}, {at("b"), at("f")},
        {at("e"), at("f")}, {at("e"), at("g")}, {at("f"), at("g")},
        {at("g"), at("h")},
        {at("h"), at("i")}, {at("h"), at("j")}, {at("i"), at("j")},
        {at("i"), at("k")}, {at("j"), at("l")},
        {at("k"), at("m")}, {at("k"), at("p")}, {at("l"), at("m")}, {at("l"), at("p")}, {at("m"), at("p")},
    };
    g.graph = build_graph(14, edges);
    return g;
}

} // namespace forcing

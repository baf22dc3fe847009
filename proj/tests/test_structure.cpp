#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "forcing/families.hpp"
#include "forcing/structure.hpp"
#include "oracles.hpp"

using namespace forcing;
namespace test = forcing::test;

namespace {

SimpleGraph k4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

void check_partition_sound(const SimpleGraph& g, const DeltaDPartition& p) {
    std::vector<int> cover(g.vertex_count(), 0);
    for (const auto& u : p.units) {
        int edges = 0;
        for (std::size_t i = 0; i < u.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < u.vertices.size(); ++j)
                edges += g.has_edge(u.vertices[i], u.vertices[j]);
        if (u.kind == UnitKind::triangle) {
            CHECK(u.vertices.size() == 3);
            CHECK(edges == 3);
        } else {
            CHECK(u.vertices.size() == 4);
            CHECK(edges == 5);
            CHECK_FALSE(g.has_edge(u.missing_pair[0], u.missing_pair[1]));
        }
        for (int v : u.vertices) ++cover[v];
    }
    for (int c : cover) CHECK(c == 1);
}

} // namespace

TEST_CASE("partition of N_2: two diamond-units with the right missing pairs") {
    NecklaceGraph n2 = diamond_necklace(2);
    DeltaDPartition p = triangle_diamond_partition(n2.graph);
    check_partition_sound(n2.graph, p);
    REQUIRE(p.units.size() == 2);
    for (int i = 1; i <= 2; ++i) {
        const Unit& u = p.units[i - 1];
        CHECK(u.kind == UnitKind::diamond);
        std::vector<int> expect{n2.layout.a(i), n2.layout.b(i), n2.layout.c(i), n2.layout.d(i)};
        std::sort(expect.begin(), expect.end());
        CHECK(u.vertices == expect);
        CHECK(u.missing_pair == std::array<int, 2>{n2.layout.a(i), n2.layout.b(i)});
    }
}

TEST_CASE("partition of the prism: two triangle-units") {
    DeltaDPartition p = triangle_diamond_partition(prism());
    check_partition_sound(prism(), p);
    REQUIRE(p.units.size() == 2);
    CHECK(p.units[0].kind == UnitKind::triangle);
    CHECK(p.units[1].kind == UnitKind::triangle);
    CHECK(p.units[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(p.units[1].vertices == std::vector<int>{3, 4, 5});
}

TEST_CASE("partition rejects bad inputs") {
    CHECK_THROWS_AS(triangle_diamond_partition(k4()), Error);
    try {
        triangle_diamond_partition(k4());
    } catch (const Error& e) {
        CHECK(e.code() == errc::is_k4);
    }
    SimpleGraph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_THROWS_AS(triangle_diamond_partition(k33), Error);
    SimpleGraph two_prisms = build_graph(
        12, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5},
             {6, 7}, {6, 8}, {7, 8}, {9, 10}, {9, 11}, {10, 11}, {6, 9}, {7, 10}, {8, 11}});
    CHECK_THROWS_AS(triangle_diamond_partition(two_prisms), Error); // disconnected
}

TEST_CASE("partition of the figure graphs") {
    NamedGraph f7 = paper_graph_fig7();
    DeltaDPartition p7 = triangle_diamond_partition(f7.graph);
    check_partition_sound(f7.graph, p7);
    CHECK(p7.units.size() == 3);
    CHECK(p7.diamond_count() == 1);

    NamedGraph f9 = paper_graph_fig9();
    DeltaDPartition p9 = triangle_diamond_partition(f9.graph);
    check_partition_sound(f9.graph, p9);
    CHECK(p9.units.size() == 4);
    CHECK(p9.diamond_count() == 2);

    NamedGraph f4 = paper_graph_fig4(6);
    DeltaDPartition p4 = triangle_diamond_partition(f4.graph);
    check_partition_sound(f4.graph, p4);
    CHECK(p4.units.size() == 6);
    CHECK(p4.all_triangles());
}

TEST_CASE("partition uniqueness: exhaustive search finds exactly one") {
    std::vector<SimpleGraph> corpus{prism(), diamond_necklace(2).graph, paper_graph_fig7().graph,
                                    diamond_necklace(3).graph, paper_graph_fig4(4).graph};
    for (const auto& g : corpus) {
        REQUIRE(g.vertex_count() <= 12);
        CHECK(test::count_triangle_diamond_partitions(g) == 1);
    }
}

TEST_CASE("contraction multigraph of the prism is a triple edge") {
    DeltaDPartition p = triangle_diamond_partition(prism());
    Multigraph m = contraction_multigraph(prism(), p);
    CHECK(m.vertex_count() == 2);
    CHECK(m.multiplicity(0, 1) == 3);
}

TEST_CASE("contraction of the ell=6 ring: 6-cycle plus three parallel pairs") {
    NamedGraph f4 = paper_graph_fig4(6);
    DeltaDPartition p = triangle_diamond_partition(f4.graph);
    Multigraph m = contraction_multigraph(f4.graph, p);
    REQUIRE(m.vertex_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 3);
    // expected multiplicities from counting inter-unit edges of the layout
    for (int i = 0; i < 6; ++i) {
        int next = (i + 1) % 6;
        int expected = (i % 2 == 0) ? 2 : 1; // free-vertex pairs double the odd-to-even hops
        CHECK(m.multiplicity(i, next) == expected);
    }
    CHECK(m.multiplicity(0, 2) == 0);
    CHECK(m.multiplicity(0, 3) == 0);
}

TEST_CASE("contraction rejects diamond-units") {
    NecklaceGraph n2 = diamond_necklace(2);
    DeltaDPartition p = triangle_diamond_partition(n2.graph);
    CHECK_THROWS_AS(contraction_multigraph(n2.graph, p), Error);
}

TEST_CASE("expansion then contraction is the identity on K_4") {
    // K_4 as a multigraph
    Multigraph m(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) m.set_multiplicity(u, v, 1);
    ExpansionResult exp = triangle_expansion(m);
    DeltaDPartition p = triangle_diamond_partition(exp.graph);
    Multigraph back = contraction_multigraph(exp.graph, p);
    CHECK(multigraphs_isomorphic(m, back));
}

TEST_CASE("optimal cycle collection: forced shapes") {
    Multigraph triple(2);
    triple.set_multiplicity(0, 1, 3);
    CycleCover c = optimal_cycle_collection(triple);
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0].vertices == std::vector<int>{0, 1});
    CHECK(c.cycles[0].instances == std::vector<int>{0, 1});
    CHECK(c.covered == VertexSet::full(2));

    // K_4: a single 4-cycle beats any 3-cycle (coverage first)
    Multigraph k4m(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4m.set_multiplicity(u, v, 1);
    CycleCover ck4 = optimal_cycle_collection(k4m);
    REQUIRE(ck4.cycles.size() == 1);
    CHECK(ck4.cycles[0].vertices.size() == 4);
    CHECK(ck4.covered.count() == 4);
}

TEST_CASE("optimal cycle collection: the ring multigraph prefers three 2-cycles") {
    NamedGraph f4 = paper_graph_fig4(6);
    DeltaDPartition p = triangle_diamond_partition(f4.graph);
    Multigraph m = contraction_multigraph(f4.graph, p);
    CycleCover c = optimal_cycle_collection(m);
    CHECK(c.covered.count() == 6);
    REQUIRE(c.cycles.size() == 3); // never the single 6-cycle
    for (const auto& cyc : c.cycles) CHECK(cyc.vertices.size() == 2);
}

TEST_CASE("optimal cycle collection agrees with the naive oracle") {
    for (int n : {2, 4, 6}) {
        for (const auto& m : enumerate_cubic_multigraphs(n)) {
            CycleCover c = optimal_cycle_collection(m);
            CHECK(test::score_of(c) == test::naive_best_cycle_collection(m));
        }
    }
}

TEST_CASE("optimal cycle collection refuses large instances") {
    Multigraph big(13);
    CHECK_THROWS_AS(optimal_cycle_collection(big), Error);
}

TEST_CASE("layering: everything covered means a single layer") {
    Multigraph triple(2);
    triple.set_multiplicity(0, 1, 3);
    CycleCover c = optimal_cycle_collection(triple);
    Layering lay = compute_layering(triple, c);
    REQUIRE(lay.layers.size() == 1);
    CHECK(lay.layers[0] == VertexSet::full(2));

    NamedGraph f4 = paper_graph_fig4(6);
    DeltaDPartition p = triangle_diamond_partition(f4.graph);
    Multigraph m = contraction_multigraph(f4.graph, p);
    Layering lay4 = compute_layering(m, optimal_cycle_collection(m));
    REQUIRE(lay4.layers.size() == 1);
    CHECK(lay4.layers[0].count() == 6);
}

TEST_CASE("layering: the two-edges rule pulls in later layers") {
    // 2-cycle on {0,1}; vertices 2 and 3 each join {0,1} twice and each
    // other once
    Multigraph m(4);
    m.set_multiplicity(0, 1, 2);
    m.set_multiplicity(2, 0, 1);
    m.set_multiplicity(2, 1, 1);
    m.set_multiplicity(3, 0, 1);
    m.set_multiplicity(3, 1, 1);
    m.set_multiplicity(2, 3, 1);
    CycleCover given;
    given.cycles.push_back(MultiCycle{{0, 1}, {0, 1}});
    given.covered = VertexSet::of(4, {0, 1});
    Layering lay = compute_layering(m, given);
    REQUIRE(lay.layers.size() == 2);
    CHECK(lay.layers[0] == VertexSet::of(4, {0, 1}));
    CHECK(lay.layers[1] == VertexSet::of(4, {2, 3}));
}

TEST_CASE("layering stalls when a vertex hangs by one edge") {
    // path-ish multigraph: 2-cycle on {0,1}, vertex 2 attached once
    Multigraph m(3);
    m.set_multiplicity(0, 1, 2);
    m.set_multiplicity(1, 2, 1);
    CycleCover given;
    given.cycles.push_back(MultiCycle{{0, 1}, {0, 1}});
    given.covered = VertexSet::of(3, {0, 1});
    CHECK_THROWS_AS(compute_layering(m, given), Error);
}

TEST_CASE("layering layers are disjoint, exhaustive, doubly joined") {
    for (int n : {4, 6}) {
        for (const auto& m : enumerate_cubic_multigraphs(n)) {
            bool connected = true;
            {
                // reuse the library predicate via a simple-graph shadow of the support
                std::vector<int> seen(m.vertex_count(), 0);
                std::vector<int> stack{0};
                seen[0] = 1;
                int reach = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int u = 0; u < m.vertex_count(); ++u)
                        if (!seen[u] && m.multiplicity(v, u) > 0) {
                            seen[u] = 1;
                            ++reach;
                            stack.push_back(u);
                        }
                }
                connected = reach == m.vertex_count();
            }
            if (!connected) continue;
            CycleCover c = optimal_cycle_collection(m);
            Layering lay = compute_layering(m, c);
            VertexSet all(m.vertex_count());
            CHECK(lay.layers[0] == c.covered);
            for (std::size_t i = 0; i < lay.layers.size(); ++i) {
                CHECK_FALSE(lay.layers[i].intersects(all));
                if (i > 0)
                    for (int v = lay.layers[i].first(); v >= 0; v = lay.layers[i].next(v)) {
                        int joins = 0;
                        for (int u = all.first(); u >= 0; u = all.next(u)) joins += m.multiplicity(u, v);
                        CHECK(joins >= 2);
                    }
                all |= lay.layers[i];
            }
            CHECK(all == VertexSet::full(m.vertex_count()));
        }
    }
}

TEST_CASE("partition JSON round trip is a fixpoint") {
    NamedGraph f9 = paper_graph_fig9();
    DeltaDPartition p = triangle_diamond_partition(f9.graph);
    std::string j1 = partition_to_json(p);
    DeltaDPartition back = partition_from_json(j1, f9.graph.vertex_count());
    std::string j2 = partition_to_json(back);
    CHECK(j1 == j2);
    CHECK(back.units.size() == p.units.size());
    CHECK(back.vertex_to_unit == p.vertex_to_unit);
}

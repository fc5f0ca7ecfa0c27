#include <random>

#include "doctest.h"
#include "levi/catalog.hpp"
#include "levi/errors.hpp"
#include "levi/graph.hpp"
#include "levi/levi_graph.hpp"
#include "oracles.hpp"

using namespace levi;

TEST_SUITE("graph") {

TEST_CASE("labels are sorted and parallel edges merge") {
    Graph g({"c", "a", "b"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(g.index_of("a"), g.index_of("b")));
    CHECK_FALSE(g.adjacent(g.index_of("a"), g.index_of("c")));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), InputError);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "z"}}), InputError);
    Graph g({"a"}, {});
    CHECK_THROWS_AS(g.index_of("z"), InputError);
    CHECK_FALSE(g.find("z").has_value());
}

TEST_CASE("induced subgraph keeps exactly the edges among kept vertices") {
    const Graph c6 = cycle_graph(6);
    const Graph p = induced_subgraph(c6, std::vector<std::string>{"v1", "v2", "v3", "v5"});
    CHECK(p.order() == 4);
    CHECK(p.size() == 2);
    CHECK(connected_components(p).size() == 2);
}

TEST_CASE("quasi-pencil minus its two hubs splits into matched pairs") {
    const Graph g = quasi_pencil_graph(4).graph;
    VertexSet alive = g.all();
    alive.reset(g.index_of("x:p2"));
    alive.reset(g.index_of("y:l2"));
    CHECK(count_components_within(g, alive) == 3);
    for (const auto& comp : components_within(g, alive)) CHECK(comp.count() == 2);
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracle::random_graph(rng, 3 + i % 10, 0.35);
        std::size_t sum = 0;
        for (VertexId v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.size());
    }
}

TEST_CASE("two-colouring agrees with an odd-cycle search") {
    std::mt19937 rng(11);
    for (int i = 0; i < 120; ++i) {
        const Graph g = oracle::random_graph(rng, 4 + i % 9, 0.25);
        const bool odd = oracle::has_odd_cycle(oracle::matrix_of(g));
        const auto colouring = two_colouring(g);
        CHECK(colouring.has_value() == !odd);
        if (colouring) {
            for (const auto& e : g.edges()) CHECK((*colouring)[e.u] != (*colouring)[e.v]);
        }
    }
}

TEST_CASE("bipartition of a Levi graph separates points from curves") {
    const LeviGraph lg = build_levi(projective_plane(2));
    const auto bp = bipartition_of(lg.graph);
    REQUIRE(bp.has_value());
    CHECK(bp->side_a.size() == 7);
    CHECK(bp->side_b.size() == 7);
    CHECK_FALSE(bipartition_of(cycle_graph(5)).has_value());
}

TEST_CASE("leaves and completeness") {
    CHECK(leaves(path_graph(5)) == std::vector<std::string>{"v1", "v5"});
    CHECK(leaves(star_graph(3)).size() == 3);
    CHECK(degree(star_graph(3), "center") == 3);
    CHECK(is_complete(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})));
    CHECK_FALSE(is_complete(path_graph(3)));
}

TEST_CASE("vertex set operations") {
    VertexSet a(70), b(70);
    a.set(1);
    a.set(65);
    b.set(65);
    CHECK(b.is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK((a - b).members() == std::vector<VertexId>{1});
    CHECK((a | b).count() == 2);
    CHECK(a.next(a.first()) == 65);
    CHECK(VertexSet::full(70).count() == 70);
}

}

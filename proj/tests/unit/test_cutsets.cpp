#include <algorithm>
#include <random>

#include "doctest.h"
#include "levi/catalog.hpp"
#include "levi/cutsets.hpp"
#include "levi/errors.hpp"
#include "levi/levi_graph.hpp"
#include "oracles.hpp"

using namespace levi;

namespace {

std::uint64_t mask_of(const Cutset& c) {
    std::uint64_t m = 0;
    for (VertexId v : c.members) m |= std::uint64_t{1} << v;
    return m;
}

VertexSet set_of(const Graph& g, std::uint64_t mask) {
    VertexSet s = g.none();
    for (VertexId v = 0; v < g.order(); ++v) {
        if ((mask >> v) & 1u) s.set(v);
    }
    return s;
}

std::vector<Graph> small_corpus() {
    std::vector<Graph> out{path_graph(4), cycle_graph(6), star_graph(3), star_graph(5),
                           quasi_pencil_graph(3).graph, quasi_pencil_graph(4).graph,
                           quasi_pencil_graph(5).graph, build_levi(pencil_lines(3)).graph,
                           build_levi(generic(1, 4)).graph};
    std::mt19937 rng(1234);
    for (int i = 0; i < 25; ++i) out.push_back(oracle::random_bipartite(rng, 3 + i % 4, 3 + (i / 4) % 4, 0.45));
    for (int i = 0; i < 15; ++i) out.push_back(oracle::random_graph(rng, 5 + i % 6, 0.35));
    return out;
}

}  // namespace

TEST_SUITE("cutsets") {

TEST_CASE("enumeration matches the exhaustive oracle") {
    for (const Graph& g : small_corpus()) {
        const auto m = oracle::matrix_of(g);
        std::vector<std::uint64_t> expected = oracle::cutsets(m);
        std::vector<std::uint64_t> got;
        for (const auto& c : enumerate_cutsets(g)) got.push_back(mask_of(c));
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
        CHECK(dimension(g) == oracle::dimension(m));
    }
}

TEST_CASE("fast and definitional tests agree on every subset") {
    for (const Graph& g : small_corpus()) {
        if (g.order() > 10) continue;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << g.order()); ++t) {
            const VertexSet s = set_of(g, t);
            REQUIRE(is_cutset(g, s) == is_cutset_fast(g, s));
        }
    }
}

TEST_CASE("omega matches the oracle") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_graph(rng, 8, 0.3);
        const auto m = oracle::matrix_of(g);
        for (std::uint64_t t = 0; t < 256; t += 7) {
            CHECK(omega(g, set_of(g, t)) == static_cast<std::size_t>(oracle::omega(m, t)));
        }
    }
    const Graph p = path_graph(3);
    CHECK(omega(p, p.all()) == 0);
}

TEST_CASE("known cutset families") {
    const Graph p4 = path_graph(4);
    const auto cs = enumerate_cutsets(p4);
    REQUIRE(cs.size() == 3);
    CHECK(member_labels(p4, cs[0]).empty());
    CHECK(member_labels(p4, cs[1]) == std::vector<std::string>{"v2"});
    CHECK(member_labels(p4, cs[2]) == std::vector<std::string>{"v3"});
    CHECK(dimension(cs) == 5);

    CHECK(enumerate_cutsets(cycle_graph(6)).size() == 12);
    CHECK(enumerate_cutsets(star_graph(3)).size() == 2);
    CHECK(dimension(star_graph(3)) == 6);
}

TEST_CASE("per-cutset bookkeeping") {
    for (const Graph& g : small_corpus()) {
        const std::int64_t n = static_cast<std::int64_t>(g.order());
        for (const auto& c : enumerate_cutsets(g)) {
            const std::int64_t t = static_cast<std::int64_t>(c.members.size());
            CHECK(c.dim_contribution == n - t + c.omega);
            CHECK(c.dim_contribution + c.height == 2 * n);
        }
    }
}

TEST_CASE("removing a cutset vertex lowers the component count") {
    for (const Graph& g : small_corpus()) {
        for (const auto& c : enumerate_cutsets(g)) {
            VertexSet t = g.none();
            for (VertexId v : c.members) t.set(v);
            for (VertexId v : c.members) {
                VertexSet smaller = t;
                smaller.reset(v);
                CHECK(omega(g, smaller) < omega(g, t));
            }
        }
    }
}

TEST_CASE("unmixedness") {
    CHECK(is_unmixed(path_graph(5)));
    CHECK_FALSE(is_unmixed(cycle_graph(4)));
    CHECK(is_unmixed(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})));
    CHECK_FALSE(is_unmixed(star_graph(3)));
    CHECK_FALSE(is_unmixed(quasi_pencil_graph(4).graph));
}

TEST_CASE("results do not depend on thread count") {
    const Graph g = build_levi(projective_plane(2)).graph;
    const auto one = enumerate_cutsets(g, {default_cutset_cap, 1});
    const auto four = enumerate_cutsets(g, {default_cutset_cap, 4});
    CHECK(one == four);
    CHECK(one.size() == 486);
    CHECK(dimension(one) == 15);
}

TEST_CASE("caps") {
    const Graph big = cycle_graph(30);
    CHECK_THROWS_AS(enumerate_cutsets(big), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_cutsets(path_graph(4), {65, 1}), InputError);
    CHECK_THROWS_AS(enumerate_cutsets(cycle_graph(10), {9, 1}), ResourceLimitError);
    CHECK(enumerate_cutsets(cycle_graph(10), {10, 1}).size() > 0);
}

TEST_CASE("prime skeleton lists components") {
    const auto sk = prime_skeleton(path_graph(4));
    REQUIRE(sk.size() == 3);
    CHECK(sk[0].components.size() == 1);
    CHECK(sk[1].components.size() == 2);
    CHECK(sk[1].components[0] == std::vector<VertexId>{0});
}

}

#include <random>

#include "doctest.h"
#include "levi/catalog.hpp"
#include "levi/cm_analysis.hpp"
#include "levi/cutsets.hpp"
#include "levi/errors.hpp"
#include "levi/levi_graph.hpp"
#include "oracles.hpp"

using namespace levi;

namespace {

const CheckRecord& evidence(const CmVerdict& v, const std::string& name) {
    for (const auto& rec : v.evidence) {
        if (rec.name == name) return rec;
    }
    FAIL("missing evidence " << name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("cm") {

TEST_CASE("leaf check") {
    CHECK(leaf_check(path_graph(5)).status == CheckStatus::passed);
    CHECK(leaf_check(star_graph(3)).status == CheckStatus::failed);
    CHECK(leaf_check(cycle_graph(6)).status == CheckStatus::failed);
    CHECK(leaf_check(cycle_graph(5)).status == CheckStatus::skipped);
    CHECK(leaf_check(Graph({"a", "b", "c"}, {{"a", "b"}})).status == CheckStatus::skipped);
}

TEST_CASE("connected dimension check") {
    CHECK(connected_dimension_check(path_graph(4)).status == CheckStatus::passed);
    CHECK(connected_dimension_check(quasi_pencil_graph(3).graph).status == CheckStatus::passed);  // 7 = |V| + 1
    CHECK(connected_dimension_check(quasi_pencil_graph(5).graph).status == CheckStatus::failed);
    CHECK(connected_dimension_check(Graph({"a", "b", "c"}, {{"a", "b"}})).status == CheckStatus::skipped);
    CHECK_THROWS_AS(connected_dimension_check(cycle_graph(40)), ResourceLimitError);
}

TEST_CASE("unmixedness check") {
    CHECK(unmixedness_check(path_graph(5)).status == CheckStatus::passed);
    CHECK(unmixedness_check(cycle_graph(4)).status == CheckStatus::failed);
    CHECK(unmixedness_check(star_graph(4)).status == CheckStatus::failed);
}

TEST_CASE("vertex connectivity matches the oracle") {
    std::mt19937 rng(5);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 60; ++i) {
        const Graph g = oracle::random_graph(rng, 5 + i % 6, 0.55);
        if (!is_connected(g) || is_complete(g)) continue;
        CHECK(vertex_connectivity(g) == oracle::kappa(oracle::matrix_of(g)));
        ++checked;
    }
    CHECK(checked >= 30);
    CHECK(vertex_connectivity(build_levi(projective_plane(2)).graph) == 3);
    CHECK(vertex_connectivity(quasi_pencil_graph(5).graph) == 2);
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    CHECK_THROWS_AS(vertex_connectivity(Graph({"a", "b", "c"}, {{"a", "b"}})), UnsupportedInputError);
    CHECK_THROWS_AS(vertex_connectivity(Graph({"a", "b"}, {{"a", "b"}})), UnsupportedInputError);
}

TEST_CASE("depth and cmdef bounds") {
    CHECK(depth_upper_bound(quasi_pencil_graph(3).graph) == 6);
    CHECK(cmdef_lower_bound(quasi_pencil_graph(3).graph) == 1);
    for (int k = 4; k <= 7; ++k) CHECK(cmdef_lower_bound(quasi_pencil_graph(k).graph) == k - 3);
    CHECK(cmdef_lower_bound(path_graph(4)) == 0);
}

TEST_CASE("verdicts") {
    const CmVerdict p4 = cm_verdict(path_graph(4));
    CHECK(p4.status == CmStatus::cm_certified);
    CHECK(p4.reasons == std::vector<std::string>{"path_rule"});

    const CmVerdict g3 = cm_verdict(quasi_pencil_graph(3).graph, {}, ArrangementContext{"quasi-pencil", "d-arrangement"});
    CHECK(g3.status == CmStatus::not_cm);
    CHECK(evidence(g3, "connected_dimension").status == CheckStatus::passed);
    CHECK(evidence(g3, "leaf_count").status == CheckStatus::failed);
    CHECK(evidence(g3, "unmixedness").status == CheckStatus::failed);
    CHECK(std::is_sorted(g3.evidence.begin(), g3.evidence.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));

    CHECK(cm_verdict(cycle_graph(4)).status == CmStatus::not_cm);
    // a triangle passes every implemented check without being certified
    CHECK(cm_verdict(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})).status ==
          CmStatus::inconclusive);
}

TEST_CASE("verdict survives the cutset cap") {
    const Graph big = build_levi(generic(2, 6)).graph;
    CutsetOptions opts;
    const CmVerdict v = cm_verdict(big, opts);
    CHECK(evidence(v, "connected_dimension").status == CheckStatus::skipped);
    CHECK(v.status == CmStatus::not_cm);  // the leaf check still applies
}

TEST_CASE("quasi-pencil cross-check") {
    for (int k = 3; k <= 6; ++k) {
        CAPTURE(k);
        const QuasiPencilCrosscheck x = quasi_pencil_crosscheck(k);
        CHECK(x.passed());
        CHECK(x.missing.empty());
        CHECK(x.unexpected.empty());
        CHECK(x.enumerated == (std::size_t{3} << (k - 1)));
        CHECK_FALSE(x.x2_singleton_is_cutset);
        CHECK_FALSE(x.y2_singleton_is_cutset);
    }
    CHECK_THROWS(quasi_pencil_crosscheck(2));
}

}

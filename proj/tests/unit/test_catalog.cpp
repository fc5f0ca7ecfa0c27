#include <algorithm>

#include "doctest.h"
#include "levi/catalog.hpp"
#include "levi/errors.hpp"
#include "levi/levi_graph.hpp"

using namespace levi;

TEST_SUITE("catalog") {

TEST_CASE("projective planes are regular with the right orders") {
    for (int p : {2, 3}) {
        const Arrangement arr = projective_plane(p);
        const std::size_t n = static_cast<std::size_t>(p * p + p + 1);
        CHECK(arr.points().size() == n);
        CHECK(arr.curves().size() == n);
        const Graph g = build_levi(arr).graph;
        for (VertexId v = 0; v < g.order(); ++v) CHECK(g.degree(v) == static_cast<std::size_t>(p + 1));
    }
    CHECK_THROWS(projective_plane(4));
}

TEST_CASE("generic arrangements have only double points") {
    for (int d = 1; d <= 3; ++d) {
        for (int k = 3; k <= 6; ++k) {
            const TVector tv = t_vector(generic(d, k));
            CHECK(tv[2] == d * d * k * (k - 1) / 2);
            CHECK(tv.point_count() == tv[2]);
        }
    }
}

TEST_CASE("pencils and quasi-pencils") {
    CHECK(t_vector(pencil_lines(5))[5] == 1);
    CHECK(t_vector(pencil_lines(5)).point_count() == 1);
    const Graph pencil = build_levi(pencil_lines(4)).graph;
    CHECK(pencil.order() == 5);
    CHECK(leaves(pencil).size() == 4);
    const Arrangement q = quasi_pencil(4);
    CHECK(t_vector(q)[3] == 1);
    CHECK(t_vector(q)[2] == 3);
}

TEST_CASE("small graphs") {
    CHECK(path_graph(4).size() == 3);
    CHECK(cycle_graph(6).size() == 6);
    CHECK(star_graph(5).size() == 5);
    CHECK_THROWS(cycle_graph(2));
}

TEST_CASE("fixtures and names") {
    for (const auto& f : fixtures()) {
        CHECK_FALSE(f.provenance.empty());
        CHECK(find_fixture(f.name).has_value());
    }
    CHECK_FALSE(find_fixture("nope").has_value());
    const auto names = catalog_names();
    CHECK(std::find(names.begin(), names.end(), "quasi-pencil") != names.end());
    CHECK(std::get<Arrangement>(make_catalog_entry("quasi-pencil", {{"k", 5}}).payload) == quasi_pencil(5));
    CHECK(std::get<Arrangement>(make_catalog_entry("fano", {}).payload) == projective_plane(2));
    CHECK_THROWS_AS(make_catalog_entry("nope", {}), InputError);
    CHECK_FALSE(standard_corpus().empty());
}

}

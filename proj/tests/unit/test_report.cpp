#include "doctest.h"
#include "levi/catalog.hpp"
#include "levi/errors.hpp"
#include "levi/report.hpp"

using namespace levi;

TEST_SUITE("report") {

TEST_CASE("quasi-pencil report") {
    const InvariantReport r = build_report(subject_from_arrangement("quasi-pencil", quasi_pencil(3)));
    CHECK(r.vertices == 6);
    CHECK(r.edges == 6);
    CHECK(r.cutset_count == 12u);
    CHECK(r.dimension == 7);
    CHECK(r.kappa == 2);
    CHECK(r.depth_upper_bound == 6);
    CHECK(r.cmdef_lower_bound == 1);
    CHECK(r.verdict.status == CmStatus::not_cm);
    CHECK(r.longest_path.length == 4);
    REQUIRE(r.regularity.size() == 3);
    CHECK(r.regularity[0].lower_bound == 4);
    REQUIRE(r.induced_c6.has_value());
    CHECK(r.induced_c6->sequence.front().rfind("l", 0) == 0);  // arrangement ids, not vertex labels
    REQUIRE(r.validation.has_value());
    CHECK(r.validation->passed());
}

TEST_CASE("graph subjects skip arrangement-only parts") {
    const InvariantReport r = build_report(subject_from_graph("p4", path_graph(4)));
    CHECK_FALSE(r.validation.has_value());
    CHECK_FALSE(r.induced_c2k.has_value());
    CHECK(r.verdict.status == CmStatus::cm_certified);
}

TEST_CASE("over-cap subjects record why") {
    const InvariantReport r = build_report(subject_from_arrangement("generic", generic(2, 6)));
    CHECK_FALSE(r.cutset_count.has_value());
    CHECK_FALSE(r.notes.empty());
    REQUIRE(r.induced_c2k.has_value());
    CHECK(r.induced_c2k->length() == 12);
}

TEST_CASE("count-only entries are not graphs") {
    CHECK_THROWS_AS(subject_from_entry(*find_fixture("dual_hesse")), UnsupportedInputError);
}

TEST_CASE("rendering is stable") {
    const Subject s = subject_from_arrangement("fano", projective_plane(2));
    ReportOptions one, four;
    four.cutsets.threads = 4;
    four.paths.threads = 4;
    const InvariantReport a = build_report(s, one);
    const InvariantReport b = build_report(s, four);
    CHECK(render_json(a) == render_json(b));
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a).find("\"dimension\": 15") != std::string::npos);
}

}

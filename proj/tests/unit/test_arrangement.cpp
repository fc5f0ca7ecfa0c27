#include <random>

#include "doctest.h"
#include "levi/arrangement.hpp"
#include "levi/arrangement_io.hpp"
#include "levi/catalog.hpp"
#include "levi/errors.hpp"

using namespace levi;

namespace {

const Arrangement& fixture_arrangement(const std::string& name) {
    static std::map<std::string, Arrangement> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, std::get<Arrangement>(find_fixture(name)->payload)).first;
    }
    return it->second;
}

const CountOnlyDataset& fixture_counts(const std::string& name) {
    static std::map<std::string, CountOnlyDataset> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, std::get<CountOnlyDataset>(find_fixture(name)->payload)).first;
    }
    return it->second;
}

const EquationCheck* find_check(const ValidationReport& r, const std::string& eq, const std::string& subject) {
    for (const auto& c : r.checks) {
        if (c.equation == eq && c.subject == subject) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_SUITE("arrangement") {

TEST_CASE("t-vector of a quasi-pencil") {
    const TVector tv = t_vector(quasi_pencil(5));
    CHECK(tv[4] == 1);
    CHECK(tv[2] == 4);
    CHECK(tv[3] == 0);
    CHECK(tv.point_count() == 5);
    CHECK_THROWS_AS(TVector(std::map<int, std::int64_t>{{1, 2}}), InputError);
    CHECK_THROWS_AS(TVector(std::map<int, std::int64_t>{{2, -1}}), InputError);
}

TEST_CASE("catalog line arrangements satisfy the count identities") {
    for (int k = 3; k <= 8; ++k) {
        CHECK(validate(quasi_pencil(k)).passed());
        CHECK(validate(pencil_lines(k)).passed());
        CHECK(validate(generic(1, k)).passed());
        CHECK(validate(generic(2, k)).passed());
        CHECK(validate(generic(3, k)).passed());
    }
    CHECK(validate(projective_plane(2)).passed());
    CHECK(validate(projective_plane(3)).passed());
}

TEST_CASE("per-curve identity appears once per curve") {
    const ValidationReport r = validate(generic(2, 4));
    CHECK(r.checks.size() == 5);
    const auto* global = find_check(r, "global", "*");
    REQUIRE(global);
    CHECK(global->lhs == 4 * 6);
}

TEST_CASE("four conics and three lines") {
    const ValidationReport r = validate(fixture_arrangement("four_conics_three_lines"));
    CHECK(r.passed());
    const auto* global = find_check(r, "global", "*");
    REQUIRE(global);
    CHECK(global->lhs == 51);
    CHECK(global->rhs == 51);
    for (const auto& c : r.checks) {
        if (c.equation == "per_line") CHECK(c.lhs == 10);
        if (c.equation == "per_conic") CHECK(c.lhs == 18);
    }
}

TEST_CASE("count-only datasets") {
    const std::vector<std::pair<std::string, std::int64_t>> expected = {
        {"dual_hesse", 36}, {"hesse_conics", 264}, {"cremona_klein", 840}, {"hesse_conic_line", 516}};
    for (const auto& [name, value] : expected) {
        CAPTURE(name);
        const auto& ds = fixture_counts(name);
        const ValidationReport r = validate_counts_only(ds.counts, ds.params);
        CHECK(r.passed());
        const auto* global = find_check(r, "global", "*");
        REQUIRE(global);
        CHECK(global->lhs == value);
        CHECK(global->rhs == value);
    }
}

TEST_CASE("dual Hesse incidence agrees with its counts") {
    const auto& arr = fixture_arrangement("dual_hesse_incidence");
    CHECK(t_vector(arr) == fixture_counts("dual_hesse").counts);
    CHECK(validate(arr).passed());
}

TEST_CASE("incomplete data is not checked") {
    const ValidationReport r = validate(fixture_arrangement("halphen_fragment"));
    CHECK(r.checks.empty());
    CHECK_FALSE(r.notes.empty());
    CHECK_THROWS_AS(validate_d_arrangement(fixture_arrangement("halphen_fragment")), PreconditionError);
    CHECK_THROWS_AS(validate_conic_line(quasi_pencil(3)), PreconditionError);
}

TEST_CASE("removing one incidence breaks an identity") {
    std::mt19937 rng(3);
    for (const Arrangement& base : {generic(1, 5), quasi_pencil(6), projective_plane(3), generic(2, 4)}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto points = base.points();
            std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
            auto& p = points[pick(rng)];
            if (p.curves.size() < 3) {
                // a double point would drop below multiplicity 2; drop it entirely
                points.erase(points.begin() + (&p - points.data()));
            } else {
                p.curves.pop_back();
            }
            const Arrangement mutated =
                Arrangement::d_arrangement(base.d(), base.curves(), std::move(points), true);
            CHECK_FALSE(validate(mutated).passed());
        }
    }
}

TEST_CASE("constructor validation") {
    std::vector<Curve> curves{{"a", 1}, {"b", 1}, {"c", 1}};
    CHECK_THROWS_AS(Arrangement::d_arrangement(1, curves, {{"p", {"a"}}}, true), InputError);
    CHECK_THROWS_AS(Arrangement::d_arrangement(1, curves, {{"p", {"a", "zz"}}}, true), InputError);
    CHECK_THROWS_AS(Arrangement::d_arrangement(1, curves, {{"p q", {"a", "b"}}}, true), InputError);
    CHECK_THROWS_AS(Arrangement::d_arrangement(2, curves, {}, true), InputError);
    CHECK_THROWS_AS(Arrangement::d_arrangement(1, {{"a", 1}, {"b", 1}}, {}, true), InputError);
    CHECK_THROWS_AS(Arrangement::conic_line(2, 1, curves, {}, true), InputError);
}

TEST_CASE("text round trip") {
    std::vector<Arrangement> corpus{quasi_pencil(4), pencil_lines(3), generic(2, 4), projective_plane(2),
                                    fixture_arrangement("four_conics_three_lines"),
                                    fixture_arrangement("halphen_fragment")};
    for (const auto& arr : corpus) {
        const std::string text = emit_arrangement(arr);
        const Arrangement back = parse_arrangement(text);
        CHECK(back == arr);
        CHECK(emit_arrangement(back) == text);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        (void)parse_arrangement("{\n  \"kind\": \"d-arrangement\",\n  oops\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS((void)parse_arrangement(R"({"kind": "d-arrangement", "d": 1, "extra": 1})"), ParseError);
    CHECK_THROWS_AS((void)parse_arrangement(R"({"kind": "circle"})"), ParseError);
    CHECK_THROWS_AS((void)parse_arrangement(""), ParseError);
}

}

#include "levi/catalog.hpp"

#include <array>
#include <set>

#include "levi/errors.hpp"

namespace levi {

namespace {

std::string num(int i) { return std::to_string(i); }

std::vector<Curve> lines(int k, const std::string& prefix = "l") {
    std::vector<Curve> out;
    for (int i = 1; i <= k; ++i) out.push_back({prefix + num(i), 1});
    return out;
}

}  // namespace

Arrangement quasi_pencil(int k) {
    if (k < 3) throw InputError("quasi-pencil needs k >= 3");
    std::vector<SingularPoint> points;
    for (int j = 1; j <= k; ++j) {
        SingularPoint p{"p" + num(j), {}};
        if (j == 2) {
            for (int i = 1; i <= k; ++i) {
                if (i != 2) p.curves.push_back("l" + num(i));
            }
        } else {
            p.curves = {"l2", "l" + num(j)};
        }
        points.push_back(std::move(p));
    }
    return Arrangement::d_arrangement(1, lines(k), std::move(points), true);
}

Arrangement pencil_lines(int k) {
    if (k < 3) throw InputError("pencil needs k >= 3");
    SingularPoint centre{"p1", {}};
    for (int i = 1; i <= k; ++i) centre.curves.push_back("l" + num(i));
    return Arrangement::d_arrangement(1, lines(k), {centre}, true);
}

Arrangement generic(int d, int k) {
    if (d < 1) throw InputError("generic arrangement needs d >= 1");
    if (k < 3) throw InputError("generic arrangement needs k >= 3");
    std::vector<Curve> curves;
    for (int i = 1; i <= k; ++i) curves.push_back({"C" + num(i), d});
    std::vector<SingularPoint> points;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            for (int m = 1; m <= d * d; ++m) {
                points.push_back({"p_" + num(i) + "_" + num(j) + "_" + num(m),
                                  {"C" + num(i), "C" + num(j)}});
            }
        }
    }
    return Arrangement::d_arrangement(d, std::move(curves), std::move(points), true);
}

Arrangement projective_plane(int p) {
    if (p != 2 && p != 3) throw InputError("projective_plane supports p = 2 or 3");
    // Normalised representatives: first non-zero coordinate equal to 1.
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            for (int c = 0; c < p; ++c) {
                const std::array<int, 3> v{a, b, c};
                for (int x : v) {
                    if (x == 0) continue;
                    if (x == 1) reps.push_back(v);
                    break;
                }
            }
        }
    }
    auto tag = [](const std::array<int, 3>& v) { return num(v[0]) + num(v[1]) + num(v[2]); };
    std::vector<Curve> curves;
    for (const auto& l : reps) curves.push_back({"L" + tag(l), 1});
    std::vector<SingularPoint> points;
    for (const auto& pt : reps) {
        SingularPoint sp{"P" + tag(pt), {}};
        for (const auto& l : reps) {
            if ((pt[0] * l[0] + pt[1] * l[1] + pt[2] * l[2]) % p == 0) sp.curves.push_back("L" + tag(l));
        }
        points.push_back(std::move(sp));
    }
    return Arrangement::d_arrangement(1, std::move(curves), std::move(points), true);
}

Graph path_graph(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back("v" + num(i));
    for (int i = 1; i < n; ++i) edges.emplace_back("v" + num(i), "v" + num(i + 1));
    return Graph(std::move(labels), edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) {
        labels.push_back("v" + num(i));
        edges.emplace_back("v" + num(i), "v" + num(i % n + 1));
    }
    return Graph(std::move(labels), edges);
}

Graph star_graph(int k) {
    if (k < 1) throw InputError("star needs k >= 1");
    std::vector<std::string> labels{"center"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= k; ++i) {
        labels.push_back("leaf" + num(i));
        edges.emplace_back("center", "leaf" + num(i));
    }
    return Graph(std::move(labels), edges);
}

namespace {

Graph point_line_p4() {
    // Lines l1, l2 meet in the double point p1; p2 is a marked simple point
    // on l2. Its Levi graph is the path y:l1 - x:p1 - y:l2 - x:p2.
    return Graph({"x:p1", "x:p2", "y:l1", "y:l2"},
                 {{"x:p1", "y:l1"}, {"x:p1", "y:l2"}, {"x:p2", "y:l2"}});
}

Arrangement four_conics_three_lines() {
    // Conics C1..C4 through four general points P1..P4; l1 = P1P4,
    // l2 = P2P3, l3 = P2P4; P = l1 ∩ l2.
    std::vector<Curve> curves{{"l1", 1}, {"l2", 1}, {"l3", 1},
                              {"C1", 2}, {"C2", 2}, {"C3", 2}, {"C4", 2}};
    std::vector<SingularPoint> points{
        {"P", {"l1", "l2"}},
        {"P1", {"C1", "C2", "C3", "C4", "l1"}},
        {"P2", {"C1", "C2", "C3", "C4", "l2", "l3"}},
        {"P3", {"C1", "C2", "C3", "C4", "l2"}},
        {"P4", {"C1", "C2", "C3", "C4", "l1", "l3"}},
    };
    return Arrangement::conic_line(3, 4, std::move(curves), std::move(points), true);
}

Arrangement dual_hesse_incidence() {
    // Dual of the affine plane over F_3: lines L<a><b> are the nine affine
    // points, triple points t1..t12 the twelve affine lines.
    std::vector<Curve> curves;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) curves.push_back({"L" + num(a) + num(b), 1});
    }
    const std::array<std::array<int, 2>, 4> directions{{{0, 1}, {1, 0}, {1, 1}, {1, 2}}};
    std::vector<SingularPoint> points;
    int next = 1;
    for (const auto& dir : directions) {
        std::set<std::set<std::string>> seen;
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                std::set<std::string> line;
                for (int s = 0; s < 3; ++s) {
                    line.insert("L" + num((a + s * dir[0]) % 3) + num((b + s * dir[1]) % 3));
                }
                if (!seen.insert(line).second) continue;
                points.push_back({"t" + num(next++), {line.begin(), line.end()}});
            }
        }
    }
    return Arrangement::d_arrangement(1, std::move(curves), std::move(points), true);
}

Arrangement halphen_fragment() {
    // Three of the nine 8-fold points of a 12-conic Halphen-pencil
    // arrangement; the rest of the incidence is not recorded.
    std::vector<Curve> curves;
    for (int i = 1; i <= 12; ++i) curves.push_back({"Q" + num(i), 2});
    auto on = [](std::initializer_list<int> ids) {
        std::vector<std::string> out;
        for (int i : ids) out.push_back("Q" + num(i));
        return out;
    };
    std::vector<SingularPoint> points{
        {"p1", on({1, 2, 3, 4, 5, 6, 7, 8})},
        {"p5", on({1, 3, 5, 6, 8, 9, 11, 12})},
        {"p7", on({2, 3, 5, 7, 8, 9, 10, 12})},
    };
    return Arrangement::d_arrangement(2, std::move(curves), std::move(points), false);
}

CountOnlyDataset count_only(std::string name, CountParams params, std::map<int, std::int64_t> t) {
    return CountOnlyDataset{std::move(name), params, TVector(std::move(t))};
}

}  // namespace

std::vector<CatalogEntry> fixtures() {
    const CountParams dual_hesse_params{ArrangementKind::d_arrangement, 1, 9, 0};
    return {
        {"p4", point_line_p4(),
         "point-line configuration: two lines through a double point plus a marked simple point; "
         "complete-intersection path"},
        {"four_conics_three_lines", four_conics_three_lines(),
         "four conics through four general points with three lines through pairs of them"},
        {"dual_hesse", count_only("dual_hesse", dual_hesse_params, {{3, 12}}),
         "dual Hesse arrangement of 9 lines, t_3 = 12 (counts only)"},
        {"dual_hesse_incidence", dual_hesse_incidence(),
         "dual Hesse arrangement with full incidence (dual of the affine plane over F_3)"},
        {"hesse_conics",
         count_only("hesse_conics", {ArrangementKind::d_arrangement, 2, 12, 0}, {{2, 12}, {8, 9}}),
         "Halphen-pencil arrangement of 12 conics, t_2 = 12, t_8 = 9 (counts only)"},
        {"hesse_conic_line",
         count_only("hesse_conic_line", {ArrangementKind::conic_line, 0, 12, 9},
                    {{2, 72}, {5, 12}, {9, 9}}),
         "Hesse arrangement of 12 conics and 9 lines, t_2 = 72, t_5 = 12, t_9 = 9 (counts only)"},
        {"cremona_klein",
         count_only("cremona_klein", {ArrangementKind::d_arrangement, 2, 21, 0},
                    {{3, 28}, {4, 21}, {21, 3}}),
         "Cremona-Klein configuration of 21 conics, t_3 = 28, t_4 = 21, t_21 = 3 (counts only)"},
        {"conic_pencil",
         count_only("conic_pencil", {ArrangementKind::d_arrangement, 2, 5, 0}, {{5, 4}}),
         "pencil of 5 smooth conics through 4 base points, t_5 = 4 (counts only)"},
        {"halphen_fragment", halphen_fragment(),
         "partial incidence of three 8-fold points of the 12-conic Halphen arrangement"},
    };
}

std::optional<CatalogEntry> find_fixture(const std::string& name) {
    for (auto& e : fixtures()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

namespace {

int param(const std::map<std::string, int>& params, const std::string& key, const std::string& name) {
    auto it = params.find(key);
    if (it == params.end()) throw InputError("'" + name + "' needs parameter --" + key);
    return it->second;
}

}  // namespace

CatalogEntry make_catalog_entry(const std::string& name, const std::map<std::string, int>& params) {
    if (name == "quasi-pencil") {
        const int k = param(params, "k", name);
        return {"quasi-pencil-k" + num(k), quasi_pencil(k), "Hirzebruch quasi-pencil of k lines"};
    }
    if (name == "pencil") {
        const int k = param(params, "k", name);
        return {"pencil-k" + num(k), pencil_lines(k), "pencil of k lines"};
    }
    if (name == "generic") {
        const int d = param(params, "d", name);
        const int k = param(params, "k", name);
        return {"generic-d" + num(d) + "-k" + num(k), generic(d, k),
                "k curves of degree d with only double points"};
    }
    if (name == "projective-plane") {
        const int p = param(params, "p", name);
        return {"projective-plane-p" + num(p), projective_plane(p), "projective plane over F_p"};
    }
    if (name == "fano") return {"fano", projective_plane(2), "Fano plane"};
    if (name == "path") {
        const int n = param(params, "n", name);
        return {"path-n" + num(n), path_graph(n), "path graph"};
    }
    if (name == "cycle") {
        const int n = param(params, "n", name);
        return {"cycle-n" + num(n), cycle_graph(n), "cycle graph"};
    }
    if (name == "star") {
        const int k = param(params, "k", name);
        return {"star-k" + num(k), star_graph(k), "star graph"};
    }
    if (auto f = find_fixture(name)) return *f;
    throw InputError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out{"quasi-pencil", "pencil", "generic", "projective-plane",
                                 "fano", "path", "cycle", "star"};
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
}

std::vector<CatalogEntry> standard_corpus() {
    std::vector<CatalogEntry> out;
    for (int k = 3; k <= 7; ++k) out.push_back(make_catalog_entry("quasi-pencil", {{"k", k}}));
    for (int k = 3; k <= 6; ++k) out.push_back(make_catalog_entry("pencil", {{"k", k}}));
    for (int d = 1; d <= 2; ++d) {
        for (int k = 3; k <= 5; ++k) out.push_back(make_catalog_entry("generic", {{"d", d}, {"k", k}}));
    }
    out.push_back(make_catalog_entry("projective-plane", {{"p", 2}}));
    out.push_back(make_catalog_entry("projective-plane", {{"p", 3}}));
    for (auto& f : fixtures()) out.push_back(std::move(f));
    return out;
}

}  // namespace levi

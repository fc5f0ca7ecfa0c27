#include "levi/cm_analysis.hpp"

#include <algorithm>
#include <set>

#include "levi/errors.hpp"
#include "levi/levi_graph.hpp"

namespace levi {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

const char* to_string(CmStatus s) {
    switch (s) {
        case CmStatus::not_cm: return "not_cm";
        case CmStatus::cm_certified: return "cm_certified";
        case CmStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

CheckRecord leaf_check(const Graph& g) {
    CheckRecord rec{"leaf_count", CheckStatus::skipped, {}, {}};
    if (g.order() < 2 || !is_connected(g)) {
        rec.detail = "requires a connected graph on at least two vertices";
        return rec;
    }
    if (!two_colouring(g)) {
        rec.detail = "graph is not bipartite";
        return rec;
    }
    const auto count = leaves(g).size();
    rec.data.emplace_back("leaves", std::to_string(count));
    if (count == 2) {
        rec.status = CheckStatus::passed;
        rec.detail = "exactly two leaves";
    } else {
        rec.status = CheckStatus::failed;
        rec.detail = "connected bipartite graph with " + std::to_string(count) +
                     " leaves; Cohen-Macaulay ones have exactly two";
    }
    return rec;
}

namespace {

CheckRecord connected_dimension_from(const Graph& g, const std::vector<Cutset>& cutsets) {
    CheckRecord rec{"connected_dimension", CheckStatus::skipped, {}, {}};
    const auto n = static_cast<std::int64_t>(g.order());
    const auto dim = dimension(cutsets);
    rec.data.emplace_back("dimension", std::to_string(dim));
    rec.data.emplace_back("vertices_plus_one", std::to_string(n + 1));
    if (dim == n + 1) {
        rec.status = CheckStatus::passed;
        rec.detail = "dim = |V| + 1";
    } else {
        rec.status = CheckStatus::failed;
        rec.detail = "dim " + std::to_string(dim) + " != |V| + 1 = " + std::to_string(n + 1);
    }
    return rec;
}

CheckRecord unmixedness_from(const std::vector<Cutset>& cutsets) {
    CheckRecord rec{"unmixedness", CheckStatus::skipped, {}, {}};
    std::int64_t lo = cutsets.front().dim_contribution;
    std::int64_t hi = lo;
    for (const auto& c : cutsets) {
        lo = std::min(lo, c.dim_contribution);
        hi = std::max(hi, c.dim_contribution);
    }
    rec.data.emplace_back("cutsets", std::to_string(cutsets.size()));
    rec.data.emplace_back("min_contribution", std::to_string(lo));
    rec.data.emplace_back("max_contribution", std::to_string(hi));
    if (lo == hi) {
        rec.status = CheckStatus::passed;
        rec.detail = "all minimal primes have dimension " + std::to_string(lo);
    } else {
        rec.status = CheckStatus::failed;
        rec.detail = "minimal primes of dimension " + std::to_string(lo) + " and " + std::to_string(hi);
    }
    return rec;
}

}  // namespace

CheckRecord connected_dimension_check(const Graph& g, const CutsetOptions& options) {
    if (g.empty() || !is_connected(g)) {
        return {"connected_dimension", CheckStatus::skipped, "requires a connected graph", {}};
    }
    return connected_dimension_from(g, enumerate_cutsets(g, options));
}

CheckRecord unmixedness_check(const Graph& g, const CutsetOptions& options) {
    return unmixedness_from(enumerate_cutsets(g, options));
}

int vertex_connectivity(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0 || !is_connected(g)) {
        throw UnsupportedInputError("vertex connectivity needs a connected non-empty graph");
    }
    if (is_complete(g)) {
        throw UnsupportedInputError("complete graphs have no disconnecting vertex set");
    }
    // N(v) separates v from a non-neighbour whenever v is not universal.
    std::size_t bound = n;
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) + 1 < n) bound = std::min(bound, g.degree(v));
    }
    std::vector<VertexId> pick;
    for (std::size_t s = 1; s < bound; ++s) {
        pick.resize(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = static_cast<VertexId>(i);
        while (true) {
            VertexSet alive = g.all();
            for (auto v : pick) alive.reset(v);
            if (count_components_within(g, alive) >= 2) return static_cast<int>(s);
            // next combination in lexicographic order
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return static_cast<int>(bound);
}

std::int64_t depth_upper_bound(const Graph& g) {
    return static_cast<std::int64_t>(g.order()) + 2 - vertex_connectivity(g);
}

std::int64_t cmdef_lower_bound(const Graph& g, const CutsetOptions& options) {
    const auto depth_ub = depth_upper_bound(g);
    return std::max<std::int64_t>(0, dimension(g, options) - depth_ub);
}

bool is_path_graph(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return false;
    if (g.size() + 1 != g.order()) return false;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) return false;
    }
    return true;
}

CmVerdict cm_verdict(const Graph& g, const CutsetOptions& options,
                     const std::optional<ArrangementContext>& context) {
    std::optional<std::vector<Cutset>> cutsets;
    std::string skip_reason;
    try {
        cutsets = enumerate_cutsets(g, options);
    } catch (const ResourceLimitError& e) {
        skip_reason = e.what();
    }
    return cm_verdict(g, cutsets ? &*cutsets : nullptr, skip_reason, context);
}

CmVerdict cm_verdict(const Graph& g, const std::vector<Cutset>* cutsets,
                     const std::string& skip_reason,
                     const std::optional<ArrangementContext>& context) {
    CmVerdict verdict;
    verdict.evidence.push_back(leaf_check(g));

    if (!cutsets) {
        verdict.evidence.push_back({"connected_dimension", CheckStatus::skipped, skip_reason, {}});
        verdict.evidence.push_back({"unmixedness", CheckStatus::skipped, skip_reason, {}});
    } else {
        if (g.empty() || !is_connected(g)) {
            verdict.evidence.push_back(
                {"connected_dimension", CheckStatus::skipped, "requires a connected graph", {}});
        } else {
            verdict.evidence.push_back(connected_dimension_from(g, *cutsets));
        }
        verdict.evidence.push_back(unmixedness_from(*cutsets));
    }

    if (context) {
        for (auto& rec : verdict.evidence) {
            rec.data.emplace_back("subject", context->name);
            if (!context->kind.empty()) rec.data.emplace_back("kind", context->kind);
        }
    }
    std::sort(verdict.evidence.begin(), verdict.evidence.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });

    for (const auto& rec : verdict.evidence) {
        if (rec.failed()) verdict.reasons.push_back(rec.name);
    }
    if (!verdict.reasons.empty()) {
        verdict.status = CmStatus::not_cm;
    } else if (is_path_graph(g)) {
        verdict.status = CmStatus::cm_certified;
        verdict.reasons.push_back("path_rule");
    } else {
        verdict.status = CmStatus::inconclusive;
    }
    return verdict;
}

QuasiPencilCrosscheck quasi_pencil_crosscheck(int k, const CutsetOptions& options) {
    if (k < 3 || static_cast<std::size_t>(2 * k) > options.cap) {
        throw InputError("quasi-pencil cross-check needs 3 <= k <= cap/2 (k=" + std::to_string(k) +
                         ", cap=" + std::to_string(options.cap) + ")");
    }
    const Graph g = quasi_pencil_graph(k).graph;
    auto x = [&](int i) { return g.index_of(point_label("p" + std::to_string(i))); };
    auto y = [&](int i) { return g.index_of(curve_label("l" + std::to_string(i))); };

    std::vector<int> others;
    for (int i = 1; i <= k; ++i) {
        if (i != 2) others.push_back(i);
    }
    const std::size_t m = others.size();

    std::set<std::vector<VertexId>> family;
    auto add = [&](std::vector<VertexId> t) {
        std::sort(t.begin(), t.end());
        family.insert(std::move(t));
    };
    add({});
    add({x(2), y(2)});
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<VertexId> a{x(2)};
        std::vector<VertexId> b{y(2)};
        for (std::size_t j = 0; j < m; ++j) {
            if ((mask >> j) & 1u) {
                a.push_back(x(others[j]));
                b.push_back(y(others[j]));
            }
        }
        add(std::move(a));
        add(std::move(b));
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<VertexId> q;
        for (std::size_t j = 0; j < m; ++j) q.push_back((mask >> j) & 1u ? y(others[j]) : x(others[j]));
        add(std::move(q));
    }

    const auto cutsets = enumerate_cutsets(g, options);
    std::set<std::vector<VertexId>> enumerated;
    for (const auto& c : cutsets) enumerated.insert(c.members);

    QuasiPencilCrosscheck out;
    out.k = k;
    out.enumerated = enumerated.size();
    out.classified = family.size();
    for (const auto& t : family) {
        if (!enumerated.contains(t)) out.missing.push_back(g.labels_of(t));
    }
    for (const auto& t : enumerated) {
        if (!family.contains(t)) out.unexpected.push_back(g.labels_of(t));
    }
    out.family_match = out.missing.empty() && out.unexpected.empty();
    out.dimension = dimension(cutsets);
    out.expected_dimension = k == 3 ? 7 : 3 * k - 3;
    out.dimension_match = out.dimension == out.expected_dimension;

    VertexSet single(g.order());
    single.set(x(2));
    out.x2_singleton_is_cutset = is_cutset(g, single);
    single = VertexSet(g.order());
    single.set(y(2));
    out.y2_singleton_is_cutset = is_cutset(g, single);
    return out;
}

}  // namespace levi

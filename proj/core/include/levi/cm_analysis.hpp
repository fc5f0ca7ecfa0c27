#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levi/cutsets.hpp"
#include "levi/graph.hpp"

namespace levi {

enum class CheckStatus { passed, failed, skipped };

const char* to_string(CheckStatus s);

/// Outcome of one necessary condition for Cohen-Macaulayness, with the
/// inputs and outputs needed to replay it.
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
    std::vector<std::pair<std::string, std::string>> data;

    bool failed() const noexcept { return status == CheckStatus::failed; }
};

/// Applies to connected bipartite graphs with at least two vertices: a
/// Cohen-Macaulay one has exactly two leaves. Fails iff the leaf count is
/// not 2; skipped otherwise.
CheckRecord leaf_check(const Graph& g);

/// Applies to connected graphs within the cutset cap: Cohen-Macaulayness
/// forces dim = |V| + 1. Skipped (with the reason) when not applicable.
CheckRecord connected_dimension_check(const Graph& g, const CutsetOptions& options = {});

/// Fails iff the cutsets do not all give the same dimension.
CheckRecord unmixedness_check(const Graph& g, const CutsetOptions& options = {});

/// Minimum number of vertices whose removal disconnects g.
/// Throws UnsupportedInputError for disconnected or complete graphs.
int vertex_connectivity(const Graph& g);

/// |V| + 2 - kappa(g).
std::int64_t depth_upper_bound(const Graph& g);

/// max(0, dimension - depth_upper_bound).
std::int64_t cmdef_lower_bound(const Graph& g, const CutsetOptions& options = {});

enum class CmStatus { not_cm, cm_certified, inconclusive };

const char* to_string(CmStatus s);

struct CmVerdict {
    CmStatus status = CmStatus::inconclusive;
    /// Names of the failed checks (not_cm) or the certifying rule (cm_certified).
    std::vector<std::string> reasons;
    /// Every check that was attempted, sorted by name.
    std::vector<CheckRecord> evidence;
};

/// Optional metadata recorded alongside the evidence.
struct ArrangementContext {
    std::string name;
    std::string kind;
};

/// A path on n >= 2 vertices: its binomial edge ideal is a complete
/// intersection, so S/J_G is Cohen-Macaulay.
bool is_path_graph(const Graph& g);

/// not_cm if any implemented necessary condition fails; cm_certified only
/// through the path rule; inconclusive otherwise. Checks that cannot run
/// (cap exceeded, wrong graph class) are recorded as skipped.
CmVerdict cm_verdict(const Graph& g, const CutsetOptions& options = {},
                     const std::optional<ArrangementContext>& context = std::nullopt);

/// Same, reusing cutsets the caller already enumerated. A null `cutsets`
/// records the dimension checks as skipped with `skip_reason`.
CmVerdict cm_verdict(const Graph& g, const std::vector<Cutset>* cutsets,
                     const std::string& skip_reason,
                     const std::optional<ArrangementContext>& context = std::nullopt);

/// Comparison of enumerated cutsets of the quasi-pencil graph G_k against
/// the closed-form family {∅} ∪ {{x2,y2}} ∪ {A ⊆ V1 : x2 ∈ A, |A| >= 2}
/// ∪ {B ⊆ V2 : y2 ∈ B, |B| >= 2} ∪ {transversals {q_i : i != 2}}.
struct QuasiPencilCrosscheck {
    int k = 0;
    std::size_t enumerated = 0;
    std::size_t classified = 0;
    std::vector<std::vector<std::string>> missing;     // classified, not enumerated
    std::vector<std::vector<std::string>> unexpected;  // enumerated, not classified
    bool family_match = false;
    std::int64_t dimension = 0;
    std::int64_t expected_dimension = 0;  // 7 for k = 3, 3k - 3 otherwise
    bool dimension_match = false;
    /// The singletons {x2} and {y2} fail the cutset definition
    /// (omega = 1 = omega(∅)), hence the |A|, |B| >= 2 amendment.
    bool x2_singleton_is_cutset = false;
    bool y2_singleton_is_cutset = false;

    bool passed() const noexcept { return family_match && dimension_match; }
};

/// Throws InputError unless 3 <= k <= options.cap / 2.
QuasiPencilCrosscheck quasi_pencil_crosscheck(int k, const CutsetOptions& options = {});

}  // namespace levi

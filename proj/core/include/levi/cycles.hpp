#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levi/arrangement.hpp"
#include "levi/graph.hpp"

namespace levi {

/// Vertex sequence of an induced cycle; first and last are adjacent.
struct CycleWitness {
    std::vector<std::string> sequence;

    std::size_t length() const noexcept { return sequence.size(); }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Independent verifier: distinct vertices, consecutive pairs (cyclically)
/// adjacent, every other pair non-adjacent, length >= 3.
bool is_induced_cycle(const Graph& g, const std::vector<std::string>& sequence);

/// Distinct vertices, consecutive pairs adjacent, no other adjacencies.
bool is_induced_path(const Graph& g, const std::vector<std::string>& sequence);

struct C6SearchOptions {
    /// Candidate triples (bipartite) or DFS steps (general) before giving up.
    std::uint64_t budget = 50'000'000;
};

/// Some induced 6-cycle, or nullopt if none exists. On bipartite graphs
/// the search runs over vertex triples of side_b and returns
/// (b1, a12, b2, a23, b3, a31) for the lexicographically first triple; for
/// Levi graphs side_b is the curve side. Other graphs use an exhaustive
/// induced-path search. Throws ResourceLimitError past the budget.
std::optional<CycleWitness> find_induced_c6(const Graph& g, const C6SearchOptions& options = {});

/// Witness (C_i, p1, C_j, p2, C_r, p3) over curve triples of a complete
/// d-arrangement with no point on all curves, in Levi labels. Throws
/// PreconditionError when those hypotheses fail and
/// InternalInconsistencyError if no witness exists (invalid incidence).
CycleWitness find_induced_c6_darrangement(const Arrangement& arr);

/// Witness (C_1, p_12, C_2, p_23, ..., C_k, p_k1) of length 2k for a
/// complete d-arrangement with k >= 4 curves and only double points.
/// Throws PreconditionError when a point of multiplicity > 2 exists.
CycleWitness find_induced_c2k(const Arrangement& arr);

inline constexpr std::size_t default_path_exact_cap = 24;

struct PathSearchOptions {
    /// Up to this many vertices the search always runs to completion.
    std::size_t exact_cap = default_path_exact_cap;
    /// Above exact_cap, search nodes allowed per start vertex.
    std::uint64_t node_budget = 200'000;
    unsigned threads = 1;
};

struct InducedPath {
    /// Number of edges.
    std::int64_t length = 0;
    std::vector<std::string> path;
    /// False when the budget cut the search short; length is then a lower bound.
    bool exact = true;
};

/// Longest induced path by branch and bound. Deterministic for any thread
/// count: ties go to the path found first from the smallest start vertex.
InducedPath longest_induced_path(const Graph& g, const PathSearchOptions& options = {});

struct InducedCycle {
    std::optional<CycleWitness> cycle;
    bool exact = true;
};

/// Longest induced cycle, same search discipline as longest_induced_path.
InducedCycle longest_induced_cycle(const Graph& g, const PathSearchOptions& options = {});

/// reg(S/J_G^t) >= 2t + l(G) - 2.
struct RegularityBound {
    int power = 1;
    std::int64_t lower_bound = 0;
    std::int64_t path_length = 0;
    bool path_exact = true;
};

/// Bounds for t = 1..t_max. Throws InputError for t_max < 1.
std::vector<RegularityBound> regularity_bounds(const InducedPath& path, int t_max);
std::vector<RegularityBound> regularity_bounds(const Graph& g, int t_max,
                                               const PathSearchOptions& options = {});

}  // namespace levi

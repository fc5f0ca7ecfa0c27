#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "levi/graph.hpp"

namespace levi {

inline constexpr std::size_t default_cutset_cap = 28;
/// Hard limit of the bitmask enumerator.
inline constexpr std::size_t max_cutset_cap = 64;

struct CutsetOptions {
    /// Graphs with more vertices are refused with ResourceLimitError.
    std::size_t cap = default_cutset_cap;
    unsigned threads = 1;
};

/// A cutset T with omega(T), (|V| - |T|) + omega(T) and |V| + |T| - omega(T).
struct Cutset {
    std::vector<VertexId> members;  // sorted
    std::int64_t omega = 0;
    std::int64_t dim_contribution = 0;
    std::int64_t height = 0;

    friend bool operator==(const Cutset&, const Cutset&) = default;
};

/// Number of connected components of g minus t. Zero iff t = V.
std::size_t omega(const Graph& g, const VertexSet& t);

/// Definitional test: t empty, or omega(t \ {v}) < omega(t) for every v in t.
bool is_cutset(const Graph& g, const VertexSet& t);

/// Equivalent test: every v in t has neighbours in at least two components
/// of g minus t.
bool is_cutset_fast(const Graph& g, const VertexSet& t);

/// All cutsets, sorted by (|T|, member labels). Output is identical for any
/// thread count. Throws ResourceLimitError when order() > options.cap and
/// InputError when options.cap exceeds max_cutset_cap.
std::vector<Cutset> enumerate_cutsets(const Graph& g, const CutsetOptions& options = {});

/// Krull dimension of S/J_G: maximum dim_contribution over all cutsets.
std::int64_t dimension(const Graph& g, const CutsetOptions& options = {});
std::int64_t dimension(const std::vector<Cutset>& cutsets);

/// True iff every cutset has the same dim_contribution.
bool is_unmixed(const Graph& g, const CutsetOptions& options = {});
bool is_unmixed(const std::vector<Cutset>& cutsets);

/// One minimal-prime record: the cutset and the components of g minus T.
struct PrimeComponentRecord {
    Cutset cutset;
    std::vector<std::vector<VertexId>> components;  // ordered by smallest member
};

std::vector<PrimeComponentRecord> prime_skeleton(const Graph& g, const CutsetOptions& options = {});

Cutset make_cutset(const Graph& g, const VertexSet& t);
std::vector<std::string> member_labels(const Graph& g, const Cutset& c);

}  // namespace levi

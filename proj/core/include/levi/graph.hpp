#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levi/vertex_set.hpp"

namespace levi {

struct Edge {
    VertexId u;
    VertexId v;  // u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with opaque string labels.
///
/// Vertices are stored in lexicographic label order, so VertexId order and
/// label order agree everywhere. The graph is immutable once built; every
/// query is const and safe to call from concurrent workers.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on duplicate labels, self-loops, or edges that
    /// reference undeclared vertices. Parallel edges are merged.
    Graph(std::vector<std::string> labels,
          const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }

    std::optional<VertexId> find(std::string_view label) const;
    /// Throws InputError for unknown labels.
    VertexId index_of(std::string_view label) const;
    VertexSet vertex_set(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const VertexSet& s) const;
    std::vector<std::string> labels_of(std::span<const VertexId> vs) const;

    VertexSet all() const { return VertexSet::full(order()); }
    VertexSet none() const { return VertexSet(order()); }

    bool adjacent(VertexId u, VertexId v) const noexcept { return rows_[u].test(v); }
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    const VertexSet& neighbor_set(VertexId v) const { return rows_[v]; }
    std::size_t degree(VertexId v) const { return adj_[v].size(); }

    /// Neighbourhood as a single machine word; only valid when order() <= 64.
    std::uint64_t neighbor_mask(VertexId v) const { return rows_[v].words().empty() ? 0 : rows_[v].words()[0]; }

    /// Sorted, u < v.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::vector<std::pair<std::string, std::string>> labelled_edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexSet> rows_;
};

struct Bipartition {
    std::vector<std::string> side_a;
    std::vector<std::string> side_b;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Throws InputError if any label in keep is unknown.
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Components of g restricted to alive, each as a vertex set; ordered by
/// smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive);
std::size_t count_components_within(const Graph& g, const VertexSet& alive);

/// Components as sorted label lists, ordered by smallest label.
std::vector<std::vector<std::string>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// 2-colouring if one exists. In every component the side holding the
/// component's smallest label goes to side_a.
std::optional<Bipartition> bipartition_of(const Graph& g);
/// Same, as a side flag per vertex (false = side_a).
std::optional<std::vector<bool>> two_colouring(const Graph& g);

std::size_t degree(const Graph& g, std::string_view v);
std::vector<std::string> leaves(const Graph& g);

bool is_complete(const Graph& g);

}  // namespace levi

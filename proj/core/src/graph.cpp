#include "levi/graph.hpp"

#include <algorithm>
#include <numeric>

#include "levi/errors.hpp"

namespace levi {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (auto dup = std::adjacent_find(labels_.begin(), labels_.end()); dup != labels_.end()) {
        throw InputError("duplicate vertex label '" + *dup + "'");
    }
    const std::size_t n = labels_.size();
    adj_.resize(n);
    rows_.assign(n, VertexSet(n));
    for (const auto& [a, b] : edges) {
        const auto u = find(a);
        const auto v = find(b);
        if (!u || !v) {
            throw InputError("edge {" + a + ", " + b + "} references an undeclared vertex");
        }
        if (*u == *v) throw InputError("self-loop at '" + a + "'");
        if (rows_[*u].test(*v)) continue;
        rows_[*u].set(*v);
        rows_[*v].set(*u);
        edges_.push_back(Edge{std::min(*u, *v), std::max(*u, *v)});
    }
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::optional<VertexId> Graph::find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

VertexId Graph::index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw InputError("unknown vertex '" + std::string(label) + "'");
}

VertexSet Graph::vertex_set(const std::vector<std::string>& labels) const {
    VertexSet s(order());
    for (const auto& l : labels) s.set(index_of(l));
    return s;
}

std::vector<std::string> Graph::labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](VertexId v) { out.push_back(labels_[v]); });
    return out;
}

std::vector<std::string> Graph::labels_of(std::span<const VertexId> vs) const {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(labels_.at(v));
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::labelled_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(labels_[e.u], labels_[e.v]);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
    return induced_subgraph(g, g.vertex_set(keep));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : g.edges()) {
        if (keep.test(e.u) && keep.test(e.v)) {
            edges.emplace_back(g.label(e.u), g.label(e.v));
        }
    }
    return Graph(g.labels_of(keep), edges);
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive) {
    std::vector<VertexSet> out;
    VertexSet unseen = alive;
    std::vector<VertexId> stack;
    for (VertexId root = unseen.first(); root < g.order(); root = unseen.first()) {
        VertexSet comp(g.order());
        comp.set(root);
        unseen.reset(root);
        stack.assign(1, root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (unseen.test(w)) {
                    unseen.reset(w);
                    comp.set(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t count_components_within(const Graph& g, const VertexSet& alive) {
    return components_within(g, alive).size();
}

std::vector<std::vector<std::string>> connected_components(const Graph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& comp : components_within(g, g.all())) out.push_back(g.labels_of(comp));
    return out;
}

bool is_connected(const Graph& g) {
    return count_components_within(g, g.all()) <= 1;
}

std::optional<std::vector<bool>> two_colouring(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<VertexId> stack;
    // Roots are visited in index order, so each component is seeded at its
    // smallest label with colour 0.
    for (VertexId root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        stack.assign(1, root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<bool> side(n);
    for (std::size_t v = 0; v < n; ++v) side[v] = colour[v] == 1;
    return side;
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    auto side = two_colouring(g);
    if (!side) return std::nullopt;
    Bipartition b;
    for (VertexId v = 0; v < g.order(); ++v) {
        ((*side)[v] ? b.side_b : b.side_a).push_back(g.label(v));
    }
    return b;
}

std::size_t degree(const Graph& g, std::string_view v) {
    return g.degree(g.index_of(v));
}

std::vector<std::string> leaves(const Graph& g) {
    std::vector<std::string> out;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) out.push_back(g.label(v));
    }
    return out;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace levi

#pragma once

// Brute-force reference computations for the test suites. These work on a
// plain adjacency matrix and deliberately share no code with the library's
// search routines.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "levi/graph.hpp"

namespace oracle {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> adj;
};

inline Matrix matrix_of(const levi::Graph& g) {
    Matrix m;
    m.n = static_cast<int>(g.order());
    m.adj.assign(m.n, std::vector<bool>(m.n, false));
    for (const auto& [a, b] : g.labelled_edges()) {
        const int u = static_cast<int>(std::find(g.labels().begin(), g.labels().end(), a) - g.labels().begin());
        const int v = static_cast<int>(std::find(g.labels().begin(), g.labels().end(), b) - g.labels().begin());
        m.adj[u][v] = m.adj[v][u] = true;
    }
    return m;
}

/// Components of the graph minus `removed` (bit i = vertex i), by repeated
/// edge relaxation on a label array.
inline int omega(const Matrix& m, std::uint64_t removed) {
    std::vector<int> label(m.n);
    std::iota(label.begin(), label.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < m.n; ++u) {
            if ((removed >> u) & 1u) continue;
            for (int v = 0; v < m.n; ++v) {
                if (((removed >> v) & 1u) || !m.adj[u][v]) continue;
                const int lo = std::min(label[u], label[v]);
                if (label[u] != lo || label[v] != lo) {
                    label[u] = label[v] = lo;
                    changed = true;
                }
            }
        }
    }
    std::set<int> roots;
    for (int u = 0; u < m.n; ++u) {
        if (!((removed >> u) & 1u)) roots.insert(label[u]);
    }
    return static_cast<int>(roots.size());
}

inline bool is_cutset(const Matrix& m, std::uint64_t t) {
    if (t == 0) return true;
    const int base = omega(m, t);
    for (int v = 0; v < m.n; ++v) {
        if (((t >> v) & 1u) && omega(m, t & ~(std::uint64_t{1} << v)) >= base) return false;
    }
    return true;
}

/// All cutsets as bitmasks over 2^n subsets.
inline std::vector<std::uint64_t> cutsets(const Matrix& m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << m.n); ++t) {
        if (is_cutset(m, t)) out.push_back(t);
    }
    return out;
}

inline int dimension(const Matrix& m) {
    int best = 0;
    for (auto t : cutsets(m)) {
        best = std::max(best, m.n - std::popcount(t) + omega(m, t));
    }
    return best;
}

/// Smallest disconnecting set size by scanning all subsets.
inline int kappa(const Matrix& m) {
    int best = m.n;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << m.n); ++t) {
        if (std::popcount(t) >= best) continue;
        if (omega(m, t) >= 2) best = std::popcount(t);
    }
    return best;
}

/// Longest induced path (edges) by extending every simple path and
/// checking inducedness from scratch at each step.
inline int longest_induced_path(const Matrix& m) {
    int best = m.n > 0 ? 0 : -1;
    std::vector<int> path;
    std::function<void()> grow = [&] {
        best = std::max(best, static_cast<int>(path.size()) - 1);
        for (int w = 0; w < m.n; ++w) {
            if (!m.adj[path.back()][w]) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (m.adj[path[i]][w]) induced = false;
            }
            if (!induced) continue;
            path.push_back(w);
            grow();
            path.pop_back();
        }
    };
    for (int s = 0; s < m.n; ++s) {
        path.assign(1, s);
        grow();
    }
    return best;
}

/// Whether any induced cycle on exactly `len` vertices exists, over all
/// vertex subsets of that size.
inline bool has_induced_cycle(const Matrix& m, int len) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.n); ++s) {
        if (std::popcount(s) != len) continue;
        bool all_deg2 = true;
        int first = -1;
        for (int u = 0; u < m.n && all_deg2; ++u) {
            if (!((s >> u) & 1u)) continue;
            if (first < 0) first = u;
            int deg = 0;
            for (int v = 0; v < m.n; ++v) {
                if (((s >> v) & 1u) && m.adj[u][v]) ++deg;
            }
            all_deg2 = deg == 2;
        }
        if (!all_deg2) continue;
        // 2-regular and connected means a single cycle
        if (omega(m, ~s & ((std::uint64_t{1} << m.n) - 1)) == 1) return true;
    }
    return false;
}

/// Exhaustive odd closed walk search via simple cycles of odd length.
inline bool has_odd_cycle(const Matrix& m) {
    for (int len = 3; len <= m.n; len += 2) {
        std::vector<int> path;
        std::function<bool()> grow = [&]() -> bool {
            if (static_cast<int>(path.size()) == len) return m.adj[path.back()][path.front()];
            for (int w = path.front() + 1; w < m.n; ++w) {
                if (!m.adj[path.back()][w]) continue;
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                path.push_back(w);
                if (grow()) return true;
                path.pop_back();
            }
            return false;
        };
        for (int s = 0; s < m.n; ++s) {
            path.assign(1, s);
            if (grow()) return true;
        }
    }
    return false;
}

/// Random bipartite graph with sides "a*" / "b*".
inline levi::Graph random_bipartite(std::mt19937& rng, int left, int right, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < left; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 0; j < right; ++j) labels.push_back("b" + std::to_string(j));
    for (int i = 0; i < left; ++i) {
        for (int j = 0; j < right; ++j) {
            if (coin(rng)) edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
        }
    }
    return levi::Graph(std::move(labels), edges);
}

/// Random simple graph on n vertices "v00".."v<n-1>".
inline levi::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    auto name = [](int i) { return std::string("v") + (i < 10 ? "0" : "") + std::to_string(i); };
    for (int i = 0; i < n; ++i) labels.push_back(name(i));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.emplace_back(name(i), name(j));
        }
    }
    return levi::Graph(std::move(labels), edges);
}

}  // namespace oracle

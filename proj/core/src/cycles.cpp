#include "levi/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "levi/errors.hpp"
#include "levi/levi_graph.hpp"
#include "parallel.hpp"

namespace levi {

namespace {

std::optional<std::vector<VertexId>> resolve(const Graph& g, const std::vector<std::string>& seq) {
    std::vector<VertexId> ids;
    for (const auto& l : seq) {
        auto v = g.find(l);
        if (!v) return std::nullopt;
        ids.push_back(*v);
    }
    std::vector<VertexId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    return ids;
}

}  // namespace

bool is_induced_cycle(const Graph& g, const std::vector<std::string>& sequence) {
    const std::size_t m = sequence.size();
    if (m < 3) return false;
    auto ids = resolve(g, sequence);
    if (!ids) return false;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if (g.adjacent((*ids)[i], (*ids)[j]) != consecutive) return false;
        }
    }
    return true;
}

bool is_induced_path(const Graph& g, const std::vector<std::string>& sequence) {
    auto ids = resolve(g, sequence);
    if (!ids) return false;
    for (std::size_t i = 0; i < ids->size(); ++i) {
        for (std::size_t j = i + 1; j < ids->size(); ++j) {
            if (g.adjacent((*ids)[i], (*ids)[j]) != (j == i + 1)) return false;
        }
    }
    return true;
}

namespace {

std::optional<CycleWitness> c6_bipartite(const Graph& g, const std::vector<bool>& side,
                                         const C6SearchOptions& options) {
    std::vector<VertexId> b;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (side[v]) b.push_back(v);
    }
    std::uint64_t steps = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& ni = g.neighbor_set(b[i]);
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            const VertexSet common_ij = ni & g.neighbor_set(b[j]);
            if (common_ij.empty()) continue;
            for (std::size_t r = j + 1; r < b.size(); ++r) {
                if (++steps > options.budget) {
                    throw ResourceLimitError("induced C6 search exceeded its budget of " +
                                                 std::to_string(options.budget) + " triples",
                                             options.budget);
                }
                const auto& nr = g.neighbor_set(b[r]);
                const VertexSet p_ij = common_ij - nr;
                if (p_ij.empty()) continue;
                const VertexSet p_jr = (g.neighbor_set(b[j]) & nr) - ni;
                if (p_jr.empty()) continue;
                const VertexSet p_ri = (nr & ni) - g.neighbor_set(b[j]);
                if (p_ri.empty()) continue;
                return CycleWitness{{g.label(b[i]), g.label(p_ij.first()), g.label(b[j]),
                                     g.label(p_jr.first()), g.label(b[r]), g.label(p_ri.first())}};
            }
        }
    }
    return std::nullopt;
}

/// Induced paths v0..v5 with v0 the smallest vertex and v1 < v5, closed by
/// the edge v5-v0. The first hit is the lexicographically smallest
/// canonical 6-cycle.
std::optional<CycleWitness> c6_general(const Graph& g, const C6SearchOptions& options) {
    std::uint64_t steps = 0;
    std::vector<VertexId> path;
    std::optional<CycleWitness> found;

    auto extend = [&](auto&& self) -> bool {
        if (++steps > options.budget) {
            throw ResourceLimitError("induced C6 search exceeded its budget of " +
                                         std::to_string(options.budget) + " steps",
                                     options.budget);
        }
        const VertexId v0 = path.front();
        const VertexId last = path.back();
        if (path.size() == 6) {
            if (g.adjacent(last, v0) && path[1] < path[5]) {
                found = CycleWitness{g.labels_of(path)};
                return true;
            }
            return false;
        }
        for (VertexId w : g.neighbors(last)) {
            if (w <= v0) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            bool chord = false;
            // w may touch v0 only as the closing vertex
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (!g.adjacent(w, path[i])) continue;
                if (i == 0 && path.size() == 5) continue;
                chord = true;
                break;
            }
            if (chord) continue;
            path.push_back(w);
            if (self(self)) return true;
            path.pop_back();
        }
        return false;
    };

    for (VertexId v0 = 0; v0 < g.order(); ++v0) {
        path.assign(1, v0);
        if (extend(extend)) return found;
    }
    return std::nullopt;
}

void require_complete_d(const Arrangement& arr, const char* op) {
    if (arr.kind() != ArrangementKind::d_arrangement || !arr.complete()) {
        throw PreconditionError(std::string(op) + " needs a complete d-arrangement");
    }
}

}  // namespace

std::optional<CycleWitness> find_induced_c6(const Graph& g, const C6SearchOptions& options) {
    if (auto side = two_colouring(g)) return c6_bipartite(g, *side, options);
    return c6_general(g, options);
}

CycleWitness find_induced_c6_darrangement(const Arrangement& arr) {
    require_complete_d(arr, "find_induced_c6_darrangement");
    const TVector tv = t_vector(arr);
    const auto k = static_cast<int>(arr.curve_count());
    if (tv[k] != 0) {
        throw PreconditionError("arrangement has a point on all " + std::to_string(k) +
                                " curves (t_k != 0)");
    }
    const auto& curves = arr.curves();
    const auto& points = arr.points();
    auto pick = [&](const std::string& a, const std::string& b,
                    const std::string& outside) -> const SingularPoint* {
        for (const auto& p : points) {
            if (arr.incident(p, a) && arr.incident(p, b) && !arr.incident(p, outside)) return &p;
        }
        return nullptr;
    };
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            for (std::size_t r = j + 1; r < curves.size(); ++r) {
                const auto& ci = curves[i].id;
                const auto& cj = curves[j].id;
                const auto& cr = curves[r].id;
                const SingularPoint* p1 = pick(ci, cj, cr);
                if (!p1) continue;
                const SingularPoint* p2 = pick(cj, cr, ci);
                if (!p2) continue;
                const SingularPoint* p3 = pick(cr, ci, cj);
                if (!p3) continue;
                return CycleWitness{{curve_label(ci), point_label(p1->id), curve_label(cj),
                                     point_label(p2->id), curve_label(cr), point_label(p3->id)}};
            }
        }
    }
    throw InternalInconsistencyError(
        "no induced C6 over any curve triple; the incidence data cannot come from a valid "
        "d-arrangement with t_k = 0");
}

CycleWitness find_induced_c2k(const Arrangement& arr) {
    require_complete_d(arr, "find_induced_c2k");
    const auto k = arr.curve_count();
    if (k < 4) throw PreconditionError("find_induced_c2k needs k >= 4 curves");
    const TVector tv = t_vector(arr);
    if (tv[2] == 0) throw PreconditionError("find_induced_c2k needs t_2 != 0");
    for (const auto& [r, t] : tv.entries()) {
        if (r > 2) {
            throw PreconditionError("find_induced_c2k needs only double points; t_" +
                                    std::to_string(r) + " = " + std::to_string(t));
        }
    }
    CycleWitness w;
    const auto& curves = arr.curves();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = curves[i].id;
        const auto& b = curves[(i + 1) % k].id;
        const SingularPoint* meet = nullptr;
        for (const auto& p : arr.points()) {
            if (arr.incident(p, a) && arr.incident(p, b)) {
                meet = &p;
                break;
            }
        }
        if (!meet) {
            throw InternalInconsistencyError("curves '" + a + "' and '" + b +
                                             "' share no point; invalid incidence data");
        }
        w.sequence.push_back(curve_label(a));
        w.sequence.push_back(point_label(meet->id));
    }
    return w;
}

namespace {

struct StartResult {
    std::int64_t best = -1;
    std::vector<VertexId> witness;
    bool exhausted_budget = false;
};

/// Shared machinery for the longest induced path/cycle searches.
class InducedSearch {
public:
    InducedSearch(const Graph& g, bool cycles, bool budgeted, std::uint64_t budget,
                  std::atomic<std::int64_t>* global_best)
        : g_(g), cycles_(cycles), budgeted_(budgeted), budget_(budget), global_best_(global_best) {}

    StartResult run(VertexId start) {
        result_ = StartResult{};
        nodes_ = 0;
        path_.assign(1, start);
        VertexSet blocked(g_.order());
        blocked.set(start);
        if (cycles_) {
            // every vertex below the start is excluded so each cycle is found
            // from its smallest vertex
            for (VertexId v = 0; v < start; ++v) blocked.set(v);
            dfs_cycle(blocked);
        } else {
            offer(0);
            dfs_path(blocked);
        }
        return result_;
    }

private:
    void offer(std::int64_t value) {
        if (value > result_.best) {
            result_.best = value;
            result_.witness = path_;
            std::int64_t seen = global_best_->load();
            while (value > seen && !global_best_->compare_exchange_weak(seen, value)) {
            }
        }
    }

    bool prune(std::int64_t upper) const {
        if (upper <= result_.best) return true;
        return !budgeted_ && upper < global_best_->load();
    }

    bool out_of_budget() {
        if (!budgeted_) return false;
        if (++nodes_ > budget_) {
            result_.exhausted_budget = true;
            return true;
        }
        return false;
    }

    std::size_t reachable(VertexId from, const VertexSet& blocked) const {
        VertexSet seen(g_.order());
        std::vector<VertexId> stack{from};
        seen.set(from);
        std::size_t count = 0;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g_.neighbors(v)) {
                if (!blocked.test(w) && !seen.test(w)) {
                    seen.set(w);
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count;
    }

    // blocked = path ∪ N(path minus its last vertex)
    void dfs_path(const VertexSet& blocked) {
        if (result_.exhausted_budget || out_of_budget()) return;
        const VertexId last = path_.back();
        const auto edges = static_cast<std::int64_t>(path_.size()) - 1;
        if (prune(edges + static_cast<std::int64_t>(reachable(last, blocked)))) return;
        VertexSet next_blocked = blocked | g_.neighbor_set(last);
        for (VertexId w : g_.neighbors(last)) {
            if (blocked.test(w)) continue;
            path_.push_back(w);
            offer(edges + 1);
            dfs_path(next_blocked);
            path_.pop_back();
            if (result_.exhausted_budget) return;
        }
    }

    // blocked = vertices below start ∪ path ∪ N(interior of path);
    // N(start) stays open so the cycle can close.
    void dfs_cycle(const VertexSet& blocked) {
        if (result_.exhausted_budget || out_of_budget()) return;
        const VertexId start = path_.front();
        const VertexId last = path_.back();
        const auto vertices = static_cast<std::int64_t>(path_.size());
        if (prune(vertices + static_cast<std::int64_t>(reachable(last, blocked)))) return;
        VertexSet next_blocked = blocked;
        if (path_.size() > 1) next_blocked |= g_.neighbor_set(last);
        for (VertexId w : g_.neighbors(last)) {
            if (blocked.test(w)) continue;
            path_.push_back(w);
            if (path_.size() >= 3 && g_.adjacent(w, start)) {
                if (path_[1] < w) offer(vertices + 1);
            } else {
                VertexSet child = next_blocked;
                child.set(w);
                dfs_cycle(child);
            }
            path_.pop_back();
            if (result_.exhausted_budget) return;
        }
    }

    const Graph& g_;
    bool cycles_;
    bool budgeted_;
    std::uint64_t budget_;
    std::atomic<std::int64_t>* global_best_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexId> path_;
    StartResult result_;
};

std::vector<StartResult> search_all_starts(const Graph& g, bool cycles, const PathSearchOptions& options) {
    const bool budgeted = g.order() > options.exact_cap;
    std::atomic<std::int64_t> global_best{-1};
    std::vector<StartResult> results(g.order());
    detail::parallel_for(g.order(), options.threads, [&](std::size_t s) {
        InducedSearch search(g, cycles, budgeted, options.node_budget, &global_best);
        results[s] = search.run(static_cast<VertexId>(s));
    });
    return results;
}

}  // namespace

InducedPath longest_induced_path(const Graph& g, const PathSearchOptions& options) {
    InducedPath out;
    if (g.empty()) return out;
    const auto results = search_all_starts(g, false, options);
    const StartResult* winner = nullptr;
    for (const auto& r : results) {
        if (r.exhausted_budget) out.exact = false;
        if (!winner || r.best > winner->best) winner = &r;
    }
    out.length = winner->best;
    out.path = g.labels_of(winner->witness);
    return out;
}

InducedCycle longest_induced_cycle(const Graph& g, const PathSearchOptions& options) {
    InducedCycle out;
    if (g.empty()) return out;
    const auto results = search_all_starts(g, true, options);
    const StartResult* winner = nullptr;
    for (const auto& r : results) {
        if (r.exhausted_budget) out.exact = false;
        if (r.best > 0 && (!winner || r.best > winner->best)) winner = &r;
    }
    if (winner) out.cycle = CycleWitness{g.labels_of(winner->witness)};
    return out;
}

std::vector<RegularityBound> regularity_bounds(const InducedPath& path, int t_max) {
    if (t_max < 1) throw InputError("regularity bounds need t_max >= 1");
    std::vector<RegularityBound> out;
    for (int t = 1; t <= t_max; ++t) {
        out.push_back({t, 2 * static_cast<std::int64_t>(t) + path.length - 2, path.length, path.exact});
    }
    return out;
}

std::vector<RegularityBound> regularity_bounds(const Graph& g, int t_max, const PathSearchOptions& options) {
    return regularity_bounds(longest_induced_path(g, options), t_max);
}

}  // namespace levi

#include "levi/cutsets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "levi/errors.hpp"
#include "parallel.hpp"

namespace levi {

std::size_t omega(const Graph& g, const VertexSet& t) {
    return count_components_within(g, g.all() - t);
}

bool is_cutset(const Graph& g, const VertexSet& t) {
    if (t.empty()) return true;
    const std::size_t base = omega(g, t);
    bool ok = true;
    t.for_each([&](VertexId v) {
        if (!ok) return;
        VertexSet smaller = t;
        smaller.reset(v);
        if (omega(g, smaller) >= base) ok = false;
    });
    return ok;
}

bool is_cutset_fast(const Graph& g, const VertexSet& t) {
    if (t.empty()) return true;
    const auto comps = components_within(g, g.all() - t);
    std::vector<std::size_t> comp_of(g.order(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        comps[i].for_each([&](VertexId v) { comp_of[v] = i; });
    }
    bool ok = true;
    t.for_each([&](VertexId v) {
        if (!ok) return;
        std::size_t first = static_cast<std::size_t>(-1);
        bool two = false;
        for (VertexId w : g.neighbors(v)) {
            const std::size_t c = comp_of[w];
            if (c == static_cast<std::size_t>(-1)) continue;
            if (first == static_cast<std::size_t>(-1)) {
                first = c;
            } else if (c != first) {
                two = true;
                break;
            }
        }
        if (!two) ok = false;
    });
    return ok;
}

Cutset make_cutset(const Graph& g, const VertexSet& t) {
    Cutset c;
    c.members = t.members();
    c.omega = static_cast<std::int64_t>(omega(g, t));
    const auto n = static_cast<std::int64_t>(g.order());
    const auto size = static_cast<std::int64_t>(c.members.size());
    c.dim_contribution = (n - size) + c.omega;
    c.height = n + size - c.omega;
    return c;
}

std::vector<std::string> member_labels(const Graph& g, const Cutset& c) {
    return g.labels_of(c.members);
}

namespace {

using Mask = std::uint64_t;

/// Depth-first enumeration over in/out decisions in BFS order. A vertex
/// placed in T must keep neighbours in two distinct potential components:
/// decided-out neighbours grouped by their connectivity inside the
/// decided-out subgraph, plus each undecided neighbour on its own. Final
/// components of G \ T only merge these groups, so the bound is safe.
class CutsetSearch {
public:
    explicit CutsetSearch(const Graph& g) : g_(g), n_(g.order()) {
        nbr_.resize(n_);
        for (VertexId v = 0; v < n_; ++v) nbr_[v] = g.neighbor_mask(v);
        order_.reserve(n_);
        std::vector<bool> seen(n_, false);
        for (VertexId root = 0; root < n_; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            std::size_t head = order_.size();
            order_.push_back(root);
            while (head < order_.size()) {
                const VertexId v = order_[head++];
                for (VertexId w : g.neighbors(v)) {
                    if (!seen[w]) {
                        seen[w] = true;
                        order_.push_back(w);
                    }
                }
            }
        }
        parent_.resize(n_);
        size_.resize(n_);
    }

    std::size_t order() const { return n_; }

    /// Replays the first `depth` decisions encoded by `prefix` (bit i set =
    /// order_[i] in T) and enumerates the subtree below it.
    void run(std::size_t depth, Mask prefix, std::vector<Mask>& out) {
        reset();
        out_ = &out;
        for (std::size_t i = 0; i < depth; ++i) {
            if (!decide(i, ((prefix >> i) & 1u) != 0)) return;
        }
        recurse(depth);
    }

private:
    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(size_.begin(), size_.end(), 1);
        history_.clear();
        in_ = 0;
        outm_ = 0;
        undecided_ = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    }

    VertexId find(VertexId v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
    }

    void rollback(std::size_t mark) {
        while (history_.size() > mark) {
            const VertexId b = history_.back();
            history_.pop_back();
            const VertexId a = parent_[b];
            size_[a] -= size_[b];
            parent_[b] = b;
        }
    }

    bool viable(VertexId v) const {
        const Mask open = nbr_[v] & undecided_;
        int groups = std::popcount(open);
        if (groups >= 2) return true;
        Mask outs = nbr_[v] & outm_;
        VertexId first_root = static_cast<VertexId>(n_);
        while (outs != 0) {
            const auto w = static_cast<VertexId>(std::countr_zero(outs));
            outs &= outs - 1;
            const VertexId r = find(w);
            if (first_root == n_) {
                first_root = r;
                ++groups;
            } else if (r != first_root) {
                return true;
            }
            if (groups >= 2) return true;
        }
        return groups >= 2;
    }

    bool all_viable() const {
        Mask t = in_;
        while (t != 0) {
            const auto v = static_cast<VertexId>(std::countr_zero(t));
            t &= t - 1;
            if (!viable(v)) return false;
        }
        return true;
    }

    /// Applies decision i; returns false if the partial assignment is dead.
    /// Undo state is restored by the caller via undo().
    bool decide(std::size_t i, bool in_t) {
        const VertexId v = order_[i];
        const Mask bit = Mask{1} << v;
        undecided_ &= ~bit;
        if (in_t) {
            in_ |= bit;
        } else {
            outm_ |= bit;
            Mask outs = nbr_[v] & outm_;
            while (outs != 0) {
                const auto w = static_cast<VertexId>(std::countr_zero(outs));
                outs &= outs - 1;
                unite(v, w);
            }
        }
        return all_viable();
    }

    void undo(std::size_t i, bool in_t, std::size_t mark) {
        const VertexId v = order_[i];
        const Mask bit = Mask{1} << v;
        undecided_ |= bit;
        if (in_t) {
            in_ &= ~bit;
        } else {
            outm_ &= ~bit;
            rollback(mark);
        }
    }

    void recurse(std::size_t i) {
        if (i == n_) {
            out_->push_back(in_);
            return;
        }
        for (bool in_t : {false, true}) {
            const std::size_t mark = history_.size();
            if (decide(i, in_t)) recurse(i + 1);
            undo(i, in_t, mark);
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Mask> nbr_;
    std::vector<VertexId> order_;
    std::vector<VertexId> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<VertexId> history_;
    Mask in_ = 0;
    Mask outm_ = 0;
    Mask undecided_ = 0;
    std::vector<Mask>* out_ = nullptr;
};

void check_cap(const Graph& g, const CutsetOptions& options) {
    if (options.cap > max_cutset_cap) {
        throw InputError("cutset cap " + std::to_string(options.cap) + " exceeds the engine limit of " +
                         std::to_string(max_cutset_cap) + " vertices");
    }
    if (g.order() > options.cap) {
        throw ResourceLimitError("graph has " + std::to_string(g.order()) +
                                     " vertices; exact cutset enumeration is capped at " +
                                     std::to_string(options.cap),
                                 options.cap);
    }
}

bool cutset_less(const Cutset& a, const Cutset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
}

}  // namespace

std::vector<Cutset> enumerate_cutsets(const Graph& g, const CutsetOptions& options) {
    check_cap(g, options);
    const std::size_t n = g.order();
    // Fixed split depth: the task list, and therefore the merged result,
    // does not depend on the number of workers.
    const std::size_t depth = std::min<std::size_t>(n, 8);
    const std::size_t tasks = std::size_t{1} << depth;
    std::vector<std::vector<Mask>> found(tasks);
    detail::parallel_for(tasks, options.threads, [&](std::size_t task) {
        CutsetSearch search(g);
        search.run(depth, static_cast<Mask>(task), found[task]);
    });

    std::vector<Cutset> out;
    for (const auto& bucket : found) {
        for (Mask m : bucket) {
            Cutset c;
            for (Mask bits = m; bits != 0; bits &= bits - 1) {
                c.members.push_back(static_cast<VertexId>(std::countr_zero(bits)));
            }
            out.push_back(std::move(c));
        }
    }
    detail::parallel_for(out.size(), options.threads, [&](std::size_t i) {
        VertexSet t(n);
        for (auto v : out[i].members) t.set(v);
        out[i] = make_cutset(g, t);
    });
    std::sort(out.begin(), out.end(), cutset_less);
    return out;
}

std::int64_t dimension(const std::vector<Cutset>& cutsets) {
    std::int64_t best = 0;
    for (const auto& c : cutsets) best = std::max(best, c.dim_contribution);
    return best;
}

std::int64_t dimension(const Graph& g, const CutsetOptions& options) {
    return dimension(enumerate_cutsets(g, options));
}

bool is_unmixed(const std::vector<Cutset>& cutsets) {
    return std::all_of(cutsets.begin(), cutsets.end(), [&](const Cutset& c) {
        return c.dim_contribution == cutsets.front().dim_contribution;
    });
}

bool is_unmixed(const Graph& g, const CutsetOptions& options) {
    return is_unmixed(enumerate_cutsets(g, options));
}

std::vector<PrimeComponentRecord> prime_skeleton(const Graph& g, const CutsetOptions& options) {
    std::vector<PrimeComponentRecord> out;
    for (auto& c : enumerate_cutsets(g, options)) {
        VertexSet t(g.order());
        for (auto v : c.members) t.set(v);
        PrimeComponentRecord rec;
        for (const auto& comp : components_within(g, g.all() - t)) rec.components.push_back(comp.members());
        rec.cutset = std::move(c);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace levi

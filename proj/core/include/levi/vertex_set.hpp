#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace levi {

using VertexId = std::uint32_t;

/// Fixed-capacity bitset over vertex indices [0, capacity).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity);

    static VertexSet full(std::size_t capacity);

    std::size_t capacity() const noexcept { return capacity_; }

    bool test(VertexId v) const noexcept {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(VertexId v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(VertexId v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;

    /// Smallest member, or capacity() when empty.
    VertexId first() const noexcept;
    /// Smallest member greater than v, or capacity() when none.
    VertexId next(VertexId v) const noexcept;

    std::vector<VertexId> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<VertexId>(std::countr_zero(bits));
                fn(static_cast<VertexId>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator&=(const VertexSet& other) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace levi

#include "levi/vertex_set.hpp"

#include <algorithm>

namespace levi {

VertexSet::VertexSet(std::size_t capacity)
    : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

VertexSet VertexSet::full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        s.words_[w] = ~std::uint64_t{0};
    }
    if (const auto tail = capacity % 64; tail != 0) {
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    }
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

VertexId VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<VertexId>(w * 64 + std::countr_zero(words_[w]));
        }
    }
    return static_cast<VertexId>(capacity_);
}

VertexId VertexSet::next(VertexId v) const noexcept {
    std::size_t pos = static_cast<std::size_t>(v) + 1;
    if (pos >= capacity_) return static_cast<VertexId>(capacity_);
    std::size_t w = pos >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
        if (bits != 0) {
            return static_cast<VertexId>(w * 64 + std::countr_zero(bits));
        }
        if (++w == words_.size()) return static_cast<VertexId>(capacity_);
        bits = words_[w];
    }
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

}  // namespace levi

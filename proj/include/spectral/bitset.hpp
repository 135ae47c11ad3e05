/*
   Copyright 2026 The Spectral Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace spectral {

/// Fixed-universe set of small non-negative integers.
///
/// Used for element subsets of a ring carrier, for subsets of a prime
/// family Y, and for subsets of a lattice. All binary operations require both
/// operands to share the same universe size.
///
/// The ordering is the canonical one used for every enumeration in the
/// library: by cardinality first, then lexicographically on the ascending
/// member lists.
class BitSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        const_iterator() = default;
        const_iterator(const BitSet* owner, std::size_t pos) : owner_(owner), pos_(pos) { seek(); }

        std::size_t operator*() const { return pos_; }
        const_iterator& operator++() {
            ++pos_;
            seek();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

    private:
        void seek() {
            const std::size_t n = owner_->size_;
            while (pos_ < n) {
                const std::uint64_t word = owner_->words_[pos_ >> 6] >> (pos_ & 63);
                if (word != 0) {
                    pos_ += static_cast<std::size_t>(std::countr_zero(word));
                    return;
                }
                pos_ = (pos_ | 63) + 1;
            }
            pos_ = n;
        }

        const BitSet* owner_ = nullptr;
        std::size_t pos_ = 0;
    };

    BitSet() = default;
    explicit BitSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static BitSet full(std::size_t universe) {
        BitSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <class Range>
    static BitSet of(std::size_t universe, const Range& indices) {
        BitSet s(universe);
        for (auto i : indices) s.set(static_cast<std::size_t>(i));
        return s;
    }

    std::size_t universe() const noexcept { return size_; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool test(std::size_t i) const noexcept { return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    BitSet& operator&=(const BitSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    BitSet& operator|=(const BitSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// Set difference.
    BitSet& operator-=(const BitSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    BitSet complement() const {
        BitSet c(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
        c.trim();
        return c;
    }

    bool is_subset_of(const BitSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~o.words_[k]) != 0) return false;
        return true;
    }

    bool intersects(const BitSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & o.words_[k]) != 0) return true;
        return false;
    }

    std::size_t intersection_count(const BitSet& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    /// Smallest member, or universe() when empty.
    std::size_t first() const noexcept { return *begin(); }

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, size_); }

    std::vector<std::size_t> members() const { return {begin(), end()}; }

    friend bool operator==(const BitSet& a, const BitSet& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) noexcept {
        if (auto c = a.count() <=> b.count(); c != 0) return c;
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        // Equal cardinality: the sorted lists first differ at the smallest
        // element of the symmetric difference; the set holding it is smaller.
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            const std::uint64_t diff = a.words_[k] ^ b.words_[k];
            if (diff == 0) continue;
            const std::uint64_t low = diff & (~diff + 1);
            return (a.words_[k] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

private:
    void trim() {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        if (size_ == 0) words_.clear();
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitSetHash {
    std::size_t operator()(const BitSet& s) const noexcept { return s.hash(); }
};

} // namespace spectral

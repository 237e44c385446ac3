#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sober {

/// Dense subset of {0, ..., universe-1}. Bits past the universe stay zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(unsigned universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset all(unsigned universe) {
        Bitset b(universe);
        for (auto& w : b.words_) w = ~uint64_t{0};
        b.mask_tail();
        return b;
    }

    static Bitset of(unsigned universe, std::initializer_list<unsigned> bits) {
        Bitset b(universe);
        for (unsigned i : bits) b.set(i);
        return b;
    }

    unsigned universe() const { return universe_; }

    bool test(unsigned i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(unsigned i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(unsigned i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    unsigned count() const {
        unsigned c = 0;
        for (uint64_t w : words_) c += static_cast<unsigned>(__builtin_popcountll(w));
        return c;
    }
    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool full() const { return count() == universe_; }

    /// other ⊆ this
    bool contains(const Bitset& other) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (other.words_[k] & ~words_[k]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) {
        a |= b;
        return a;
    }

    std::vector<uint16_t> elements() const {
        std::vector<uint16_t> out;
        out.reserve(count());
        for (unsigned i = 0; i < universe_; ++i)
            if (test(i)) out.push_back(static_cast<uint16_t>(i));
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Canonical listing order: by size, then by the first index where the two
    /// sets differ, the set containing that index first.
    friend bool canonical_less(const Bitset& a, const Bitset& b) {
        unsigned ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (size_t k = 0; k < a.words_.size(); ++k) {
            uint64_t diff = a.words_[k] ^ b.words_[k];
            if (diff) {
                unsigned bit = static_cast<unsigned>(__builtin_ctzll(diff));
                return (a.words_[k] >> bit) & 1;
            }
        }
        return false;
    }

private:
    void mask_tail() {
        if (unsigned rem = universe_ & 63; rem != 0 && !words_.empty())
            words_.back() &= (uint64_t{1} << rem) - 1;
    }

    unsigned universe_ = 0;
    std::vector<uint64_t> words_;
};

struct CanonicalLess {
    bool operator()(const Bitset& a, const Bitset& b) const { return canonical_less(a, b); }
};

}  // namespace sober

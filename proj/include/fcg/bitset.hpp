#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fcg {

// Fixed-size bitset sized at runtime. Used for transaction rows, item
// occurrence columns and cluster membership, where the hot operations are
// word-parallel subset tests and popcounts that must not allocate.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset all_set(std::size_t nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    // this = a & b, all three of equal size
    void assign_and(const Bitset& a, const Bitset& b) {
        nbits_ = a.nbits_;
        words_.resize(a.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = a.words_[i] & b.words_[i];
    }

    void and_with(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
    }

    // popcount(a & b) without materializing the intersection
    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    // For two distinct sets of equal cardinality, the one whose sorted member
    // list is lexicographically smaller is the one containing the lowest bit
    // on which they differ.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(w));
                out.push_back(wi * 64 + bit);
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename Range>
    static Bitset from_indices(std::size_t nbits, const Range& indices) {
        Bitset b(nbits);
        for (auto i : indices) b.set(static_cast<std::size_t>(i));
        return b;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace fcg

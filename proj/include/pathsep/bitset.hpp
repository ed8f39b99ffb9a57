#ifndef PATHSEP_BITSET_HPP
#define PATHSEP_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace pathsep {

// Fixed-width bit vector packed into 64-bit words. Row type for signature
// tables and path edge sets, where subset tests dominate.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // a.is_subset_of(b): every bit of a present in b.
    bool is_subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= other.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= other.words_[k];
        return *this;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                unsigned b = std::countr_zero(w);
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pathsep

#endif

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hyperforge {

/// Largest carrier a FiniteHyperfield may have.
inline constexpr int kMaxCarrier = 256;

/// Subset of {0, ..., kMaxCarrier-1} stored as a fixed-width bit array.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::initializer_list<int> members) {
        for (int m : members) insert(m);
    }

    void insert(int x) { words_[static_cast<std::size_t>(x) >> 6U] |= bit(x); }
    void erase(int x) { words_[static_cast<std::size_t>(x) >> 6U] &= ~bit(x); }
    bool contains(int x) const { return (words_[static_cast<std::size_t>(x) >> 6U] & bit(x)) != 0; }

    bool empty() const {
        for (auto w : words_) {
            if (w) return false;
        }
        return true;
    }
    int size() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Calls f(x) for every member in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < kWords; ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for_each([&](int x) { out.push_back(x); });
        return out;
    }

private:
    static constexpr std::size_t kWords = kMaxCarrier / 64;
    static std::uint64_t bit(int x) { return std::uint64_t{1} << (static_cast<unsigned>(x) & 63U); }

    std::array<std::uint64_t, kWords> words_{};
};

} // namespace hyperforge

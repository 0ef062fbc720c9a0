#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace frc {

// Fixed-universe bitset over packet indices [0, universe). Unions are
// word-parallel; count() is a popcount over the words.
class PacketSet {
public:
    PacketSet() = default;
    explicit PacketSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    void insert(std::size_t packet) { words_[packet >> 6] |= bit(packet); }
    void erase(std::size_t packet) { words_[packet >> 6] &= ~bit(packet); }
    bool contains(std::size_t packet) const {
        return (words_[packet >> 6] & bit(packet)) != 0;
    }

    std::size_t count() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    PacketSet& operator|=(const PacketSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    PacketSet& operator&=(const PacketSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    PacketSet& subtract(const PacketSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    // this = a | b without reallocating; all three share one universe.
    void assign_union(const PacketSet& a, const PacketSet& b) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] | b.words_[i];
    }

    // |a | b| without materialising the union.
    static std::size_t union_count(const PacketSet& a, const PacketSet& b) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(a.words_[i] | b.words_[i]));
        return total;
    }

    bool is_subset_of(const PacketSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    // Ascending packet indices.
    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word != 0) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    friend bool operator==(const PacketSet&, const PacketSet&) = default;

private:
    static std::uint64_t bit(std::size_t packet) { return std::uint64_t{1} << (packet & 63); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace frc

#pragma once

// A set of group elements as a bit vector indexed by canonical element rank.

#include <cstdint>
#include <vector>

#include "harborth/bitkernel.hpp"

namespace harborth {

using ElemRank = std::uint32_t;

class DenseSet {
public:
    DenseSet() : nbits_(0) {}
    explicit DenseSet(std::uint32_t universe_bits)
        : nbits_(universe_bits), w_(kern::words_for_bits(universe_bits), 0) {}

    std::uint32_t universe() const { return nbits_; }
    std::size_t word_count() const { return w_.size(); }
    std::uint64_t* words() { return w_.data(); }
    const std::uint64_t* words() const { return w_.data(); }

    bool test(ElemRank i) const { return kern::test_bit(w_.data(), i); }
    void set(ElemRank i) { kern::set_bit(w_.data(), i); }
    void reset(ElemRank i) { kern::clear_bit(w_.data(), i); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    std::size_t count() const { return kern::popcount(w_.data(), w_.size()); }
    bool empty() const { return kern::is_zero(w_.data(), w_.size()); }
    bool contains_all(const DenseSet& other) const {
        return kern::contains_all(w_.data(), other.w_.data(), w_.size());
    }

    DenseSet& operator|=(const DenseSet& other) {
        kern::or_into(w_.data(), other.w_.data(), w_.size());
        return *this;
    }
    DenseSet& operator&=(const DenseSet& other) {
        kern::and_into(w_.data(), other.w_.data(), w_.size());
        return *this;
    }

    friend bool operator==(const DenseSet& a, const DenseSet& b) {
        return a.nbits_ == b.nbits_ && kern::equal(a.w_.data(), b.w_.data(), a.w_.size());
    }

    std::vector<ElemRank> to_ranks() const {
        std::vector<ElemRank> out;
        out.reserve(count());
        for (ElemRank i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    static DenseSet of_ranks(std::uint32_t universe_bits, const std::vector<ElemRank>& ranks) {
        DenseSet s(universe_bits);
        for (ElemRank r : ranks) s.set(r);
        return s;
    }

private:
    std::uint32_t nbits_;
    std::vector<std::uint64_t> w_;
};

}  // namespace harborth

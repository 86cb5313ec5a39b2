#pragma once

#include "lrfact/algebra.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lrfact {

// Fixed-dimension collection of 0/1 vectors packed 64 per word.
// Hamming distances via xor + popcount; this is the hot path of the
// clustering loop when p=2.
class PackedVectors {
public:
    explicit PackedVectors(std::size_t dim)
        : dim_(dim), words_((dim + 63) / 64) {}

    void append(std::span<const Residue> v) {
        const std::size_t base = bits_.size();
        bits_.resize(base + words_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (v[i]) bits_[base + i / 64] |= std::uint64_t{1} << (i % 64);
        }
        ++count_;
    }

    std::span<const std::uint64_t> operator[](std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }

    std::size_t count() const { return count_; }
    std::size_t dim() const { return dim_; }
    std::size_t words() const { return words_; }

private:
    std::size_t dim_;
    std::size_t words_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline std::size_t hamming(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] ^ b[w]);
    return total;
}

}  // namespace lrfact

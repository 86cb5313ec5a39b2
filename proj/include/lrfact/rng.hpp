#pragma once

#include <cstdint>
#include <random>

namespace lrfact {

// splitmix64 finalizer. All seed derivation in the library goes through
// this one mixing function so that runs are reproducible bit for bit.
std::uint64_t mix64(std::uint64_t z);

// Seed of the index-th derived stream of a master seed: restart i of a
// multi-start run uses derive_seed(master, i), block b of a partitioned
// run uses derive_seed(master, b + 1), and so on. Callers document their
// index layout next to the call.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// mt19937_64 plus sampling helpers with fixed algorithms. The standard
// does not pin down uniform_int_distribution, so we do our own rejection
// sampling to keep outputs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Unbiased uniform draw from {0,...,bound-1}; bound >= 1.
    std::size_t uniform_below(std::size_t bound);

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace lrfact

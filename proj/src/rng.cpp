#include "lrfact/rng.hpp"

#include <limits>
#include <stdexcept>

namespace lrfact {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

std::size_t Rng::uniform_below(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below(0)");
    if (bound == 1) return 0;
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % b;
    for (;;) {
        const std::uint64_t v = gen_();
        if (v < limit) return static_cast<std::size_t>(v % b);
    }
}

}  // namespace lrfact

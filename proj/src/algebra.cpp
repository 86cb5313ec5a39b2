#include "lrfact/algebra.hpp"

#include <limits>
#include <stdexcept>

namespace lrfact {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Algebra Algebra::field(std::uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
    }
    if (p > std::numeric_limits<Residue>::max()) {
        throw std::invalid_argument("p=" + std::to_string(p) + " exceeds the residue range");
    }
    return Algebra(Kind::field, p);
}

Algebra Algebra::boolean() {
    return Algebra(Kind::boolean, 2);
}

std::string Algebra::name() const {
    return is_boolean() ? "boolean" : "gf(" + std::to_string(p_) + ")";
}

}  // namespace lrfact

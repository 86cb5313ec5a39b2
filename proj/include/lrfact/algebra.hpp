#pragma once

#include <cstdint>
#include <string>

namespace lrfact {

// Residues fit 16 bits: the algorithms are exponential in log(p) anyway,
// so primes anywhere near 2^16 are already far beyond practical use.
using Residue = std::uint16_t;

// Costs and errors are exact integers throughout; no floating point.
using Cost = std::int64_t;

bool is_prime(std::uint32_t n);

// Arithmetic domain of a matrix: GF(p) for a prime p, or the Boolean
// semiring ({0,1}, and, or). Boolean distances coincide with mod-2
// distances; only the matrix product differs (1+1 saturates to 1).
class Algebra {
public:
    enum class Kind { field, boolean };

    static Algebra field(std::uint32_t p);
    static Algebra boolean();

    Kind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    bool is_field() const { return kind_ == Kind::field; }
    bool is_boolean() const { return kind_ == Kind::boolean; }

    std::string name() const;   // "gf(7)" or "boolean"

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    Algebra(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

}  // namespace lrfact

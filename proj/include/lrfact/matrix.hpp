#pragma once

#include "lrfact/algebra.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lrfact {

// Dense row-major matrix with entries in {0,...,p-1}.
// Operations on matrices never mutate their inputs.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Algebra algebra);
    Matrix(std::size_t rows, std::size_t cols, Algebra algebra, std::vector<Residue> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Algebra& algebra() const { return algebra_; }

    Residue operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Residue& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const Residue> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    std::vector<Residue> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Residue> values);

    const std::vector<Residue>& entries() const { return entries_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    Algebra algebra_;
    std::vector<Residue> entries_;
};

// Rank over GF(p) by Gaussian elimination on a copy; rejects Boolean
// matrices (Boolean rank is a different, NP-hard quantity).
std::size_t gfp_rank(const Matrix& m);

// Matrix product under the shared algebra: mod-p sums for fields,
// saturating or-of-ands for Boolean.
Matrix product(const Matrix& u, const Matrix& v);

// Sum over entries of ((a - b) mod p)^q, evaluated in the integers with
// the convention 0^0 = 0. For p=2 this is the Hamming count for every q.
Cost entrywise_error(const Matrix& a, const Matrix& b, unsigned q);

Matrix transpose(const Matrix& m);

// d^q for all d in [0,p), with 0^0 = 0. Throws if a power overflows.
std::vector<Cost> distance_pow_table(std::uint32_t p, unsigned q);

}  // namespace lrfact

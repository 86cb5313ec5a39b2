#include "lrfact/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrfact {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix must have at least one row and one column");
    }
}

// Modular inverse by extended Euclid; p prime, 0 < a < p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Algebra algebra)
    : rows_(rows), cols_(cols), algebra_(algebra), entries_(rows * cols, 0) {
    check_shape(rows, cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Algebra algebra, std::vector<Residue> entries)
    : rows_(rows), cols_(cols), algebra_(algebra), entries_(std::move(entries)) {
    check_shape(rows, cols);
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("entry count does not match matrix shape");
    }
    for (Residue e : entries_) {
        if (e >= algebra_.p()) {
            throw std::invalid_argument("entry " + std::to_string(e) + " out of range for p=" +
                                        std::to_string(algebra_.p()));
        }
    }
}

std::vector<Residue> Matrix::column(std::size_t j) const {
    std::vector<Residue> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = entries_[i * cols_ + j];
    return out;
}

void Matrix::set_column(std::size_t j, std::span<const Residue> values) {
    if (values.size() != rows_) {
        throw std::invalid_argument("column length does not match row count");
    }
    for (std::size_t i = 0; i < rows_; ++i) entries_[i * cols_ + j] = values[i];
}

std::size_t gfp_rank(const Matrix& m) {
    if (!m.algebra().is_field()) {
        throw std::invalid_argument("gfp_rank requires a field algebra; Boolean rank is unsupported");
    }
    const std::uint64_t p = m.algebra().p();
    const std::size_t rows = m.rows(), cols = m.cols();

    // Work on a widened copy; the input is never touched.
    std::vector<std::uint64_t> work(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) work[i] = m.entries()[i];
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return work[i * cols + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(at(rank, col)),
                                              static_cast<std::uint32_t>(p));
        for (std::size_t j = col; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t factor = at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                at(i, j) = (at(i, j) + (p - factor) * at(rank, j)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

Matrix product(const Matrix& u, const Matrix& v) {
    if (u.algebra() != v.algebra()) {
        throw std::invalid_argument("product requires matching algebras");
    }
    if (u.cols() != v.rows()) {
        throw std::invalid_argument("product dimension mismatch: " + std::to_string(u.cols()) +
                                    " vs " + std::to_string(v.rows()));
    }
    const std::size_t m = u.rows(), r = u.cols(), n = v.cols();
    Matrix out(m, n, u.algebra());
    if (u.algebra().is_boolean()) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Residue acc = 0;
                for (std::size_t t = 0; t < r && acc == 0; ++t) {
                    acc = static_cast<Residue>(u(i, t) & v(t, j));
                }
                out(i, j) = acc;
            }
        }
    } else {
        const std::uint64_t p = u.algebra().p();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < r; ++t) {
                    acc += static_cast<std::uint64_t>(u(i, t)) * v(t, j);
                }
                out(i, j) = static_cast<Residue>(acc % p);
            }
        }
    }
    return out;
}

std::vector<Cost> distance_pow_table(std::uint32_t p, unsigned q) {
    std::vector<Cost> table(p);
    table[0] = 0;  // 0^0 = 0 by convention
    for (std::uint32_t d = 1; d < p; ++d) {
        Cost v = 1;
        for (unsigned e = 0; e < q; ++e) {
            if (__builtin_mul_overflow(v, static_cast<Cost>(d), &v)) {
                throw std::invalid_argument("q=" + std::to_string(q) + " overflows with p=" +
                                            std::to_string(p));
            }
        }
        table[d] = v;
    }
    return table;
}

Cost entrywise_error(const Matrix& a, const Matrix& b, unsigned q) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("entrywise_error shape mismatch");
    }
    if (a.algebra() != b.algebra()) {
        throw std::invalid_argument("entrywise_error algebra mismatch");
    }
    const std::uint32_t p = a.algebra().p();
    const auto table = distance_pow_table(p, q);
    Cost total = 0;
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) {
        const std::uint32_t diff = (ae[i] + p - be[i]) % p;  // paper orientation: a minus b
        total += table[diff];
    }
    return total;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows(), m.algebra());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    }
    return out;
}

}  // namespace lrfact

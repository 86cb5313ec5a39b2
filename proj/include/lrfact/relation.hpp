#pragma once

#include "lrfact/algebra.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace lrfact {

// One k-ary relation over {0,...,p-1}: an ordered list of distinct
// k-tuples. The stored order is the tie-breaking order wherever an
// argmin over tuples is taken.
class Relation {
public:
    Relation(std::size_t arity, std::uint32_t p, std::vector<Residue> flat_tuples);

    std::size_t arity() const { return arity_; }
    std::uint32_t p() const { return p_; }
    std::size_t tuple_count() const { return tuples_.size() / arity_; }

    std::span<const Residue> tuple(std::size_t t) const {
        return {tuples_.data() + t * arity_, arity_};
    }
    const std::vector<Residue>& flat() const { return tuples_; }

    bool contains(std::span<const Residue> t) const;

private:
    std::size_t arity_;
    std::uint32_t p_;
    std::vector<Residue> tuples_;  // tuple-major, tuple_count x arity
};

// The per-row constraint family R_1,...,R_m. Either one shared relation
// (the factorization reduction always produces this; stored once) or an
// explicit relation per row.
class RelationSet {
public:
    static RelationSet uniform(std::size_t rows, Relation shared);
    static RelationSet per_row(std::vector<Relation> relations);

    std::size_t rows() const { return rows_; }
    std::size_t arity() const { return arity_; }
    std::uint32_t modulus() const { return p_; }
    bool is_uniform() const { return shared_ != nullptr; }

    const Relation& row(std::size_t i) const {
        return shared_ ? *shared_ : per_row_[i];
    }

private:
    RelationSet() = default;

    std::size_t rows_ = 0;
    std::size_t arity_ = 0;
    std::uint32_t p_ = 0;
    std::shared_ptr<const Relation> shared_;
    std::vector<Relation> per_row_;
};

}  // namespace lrfact

#include "lrfact/relation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrfact {

Relation::Relation(std::size_t arity, std::uint32_t p, std::vector<Residue> flat_tuples)
    : arity_(arity), p_(p), tuples_(std::move(flat_tuples)) {
    if (arity_ == 0) throw std::invalid_argument("relation arity must be positive");
    if (tuples_.empty() || tuples_.size() % arity_ != 0) {
        throw std::invalid_argument("relation must hold a nonempty whole number of tuples");
    }
    for (Residue e : tuples_) {
        if (e >= p_) throw std::invalid_argument("relation entry out of range for p");
    }
    // Distinctness: sort tuple indices lexicographically and look for equal
    // neighbours. Comparisons short-circuit at the first differing slot.
    std::vector<std::size_t> order(tuple_count());
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(tuples_.begin() + a * arity_,
                                            tuples_.begin() + (a + 1) * arity_,
                                            tuples_.begin() + b * arity_,
                                            tuples_.begin() + (b + 1) * arity_);
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (!less(order[i], order[i + 1]) && !less(order[i + 1], order[i])) {
            throw std::invalid_argument("relation tuples must be distinct");
        }
    }
}

bool Relation::contains(std::span<const Residue> t) const {
    if (t.size() != arity_) return false;
    for (std::size_t i = 0; i < tuple_count(); ++i) {
        if (std::equal(t.begin(), t.end(), tuple(i).begin())) return true;
    }
    return false;
}

RelationSet RelationSet::uniform(std::size_t rows, Relation shared) {
    if (rows == 0) throw std::invalid_argument("relation set needs at least one row");
    RelationSet rs;
    rs.rows_ = rows;
    rs.arity_ = shared.arity();
    rs.p_ = shared.p();
    rs.shared_ = std::make_shared<const Relation>(std::move(shared));
    return rs;
}

RelationSet RelationSet::per_row(std::vector<Relation> relations) {
    if (relations.empty()) throw std::invalid_argument("relation set needs at least one row");
    RelationSet rs;
    rs.rows_ = relations.size();
    rs.arity_ = relations.front().arity();
    rs.p_ = relations.front().p();
    for (const Relation& r : relations) {
        if (r.arity() != rs.arity_ || r.p() != rs.p_) {
            throw std::invalid_argument("per-row relations must share arity and modulus");
        }
    }
    rs.per_row_ = std::move(relations);
    return rs;
}

}  // namespace lrfact

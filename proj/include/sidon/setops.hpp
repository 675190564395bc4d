#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sidon/rational.hpp"

namespace sidon {

/// Finite subset of Q kept sorted ascending without duplicates.
class FiniteSet {
public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<Rational> values);
    /// Sorts and removes duplicates.
    explicit FiniteSet(std::vector<Rational> values);

    std::span<const Rational> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Rational& x) const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<Rational> elements_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b);

/// A + c
FiniteSet translate(const FiniteSet& a, const Rational& c);
/// c * A
FiniteSet dilate(const Rational& c, const FiniteSet& a);
/// A + B = {a + b}
FiniteSet sumset(const FiniteSet& a, const FiniteSet& b);
/// A - B = {a - b}
FiniteSet difference_set(const FiniteSet& a, const FiniteSet& b);

/// hA, all sums of h elements of A with repetition. 0A = {0}; hA = {} for empty A and h >= 1.
FiniteSet h_fold_sumset(const FiniteSet& a, std::size_t h);

/// rA - sA
FiniteSet r_s_sum_difference(const FiniteSet& a, std::size_t r, std::size_t s);

/// A_{r,h}(b) = rA + (h - r) b. Throws DomainError when r > h.
FiniteSet shifted_sumset(const FiniteSet& a, const Rational& b, std::size_t r, std::size_t h);

}  // namespace sidon

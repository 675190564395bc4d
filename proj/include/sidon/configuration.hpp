#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sidon/rational.hpp"

namespace sidon {

/// Ordered sequence of pairwise distinct rationals a_1, ..., a_k (1-based indices).
class PointConfiguration {
public:
    /// Throws EmptyInputError or DuplicateElementError.
    static PointConfiguration validate(std::vector<Rational> points);

    std::size_t size() const { return points_.size(); }
    /// 1-based access.
    const Rational& at(std::size_t index) const { return points_.at(index - 1); }
    std::span<const Rational> points() const { return points_; }

    /// Configuration of the points at the given 1-based indices, in that order.
    PointConfiguration subsequence(std::span<const std::size_t> indices) const;

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

private:
    explicit PointConfiguration(std::vector<Rational> points) : points_(std::move(points)) {}

    std::vector<Rational> points_;
};

}  // namespace sidon

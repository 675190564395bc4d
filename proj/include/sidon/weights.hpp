#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sidon/configuration.hpp"
#include "sidon/rational.hpp"

namespace sidon {

/// Integer vector w on indices 1..k with nonempty support, sum(w) = 0 and
/// 1 <= (sum of positive entries) <= h. The form f_w(a) = sum w_i a_i vanishes
/// exactly on the hyperplane H_w of configurations carrying that collision.
class WeightVector {
public:
    /// coefficients[i - 1] is w_i. Throws DomainError if any defining condition fails.
    WeightVector(std::size_t h, std::vector<std::int64_t> coefficients);

    std::size_t k() const { return coefficients_.size(); }
    std::size_t h() const { return h_; }
    /// 1-based; zero outside the support.
    std::int64_t operator[](std::size_t index) const { return coefficients_.at(index - 1); }
    std::span<const std::int64_t> coefficients() const { return coefficients_; }

    /// Indices (1-based, ascending) with a nonzero coefficient.
    std::vector<std::size_t> support() const;
    /// Sum of the positive coefficients (equal to minus the sum of the negative ones).
    std::int64_t positive_mass() const;

    WeightVector negated() const;
    /// Same coefficients padded with zeros to a larger index universe.
    WeightVector embedded(std::size_t new_k) const;
    /// Same coefficients viewed as a member of the family for a larger order.
    WeightVector with_order(std::size_t new_h) const;
    bool is_canonical() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::size_t h_;
    std::vector<std::int64_t> coefficients_;
};

/// Visits every weight vector for indices 1..k and order h in ascending lexicographic
/// order of (w_1, ..., w_k). With canonical set, only the member of {w, -w} whose first
/// nonzero entry is positive is visited. Stops early when visit returns false.
void for_each_weight_vector(std::size_t k, std::size_t h, bool canonical,
                            const std::function<bool(const WeightVector&)>& visit);

std::vector<WeightVector> enumerate_weight_vectors(std::size_t k, std::size_t h, bool canonical);

/// f_w(a) = sum w_i a_i. Throws DomainError when the support reaches past the points.
Rational evaluate_form(const WeightVector& w, std::span<const Rational> points);
Rational evaluate_form(const WeightVector& w, const PointConfiguration& config);

/// True iff the configuration lies on H_w.
bool hyperplane_member(const WeightVector& w, const PointConfiguration& config);

}  // namespace sidon

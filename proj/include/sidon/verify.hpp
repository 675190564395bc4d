#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "sidon/configuration.hpp"
#include "sidon/rational.hpp"
#include "sidon/weights.hpp"

namespace sidon {

/// Coefficient vectors u != v, each summing to h; on a configuration where
/// sum u_i a_i = sum v_i a_i they show an h-fold sum with two representations.
class CollisionWitness {
public:
    using Counts = std::map<std::size_t, std::size_t>;  // 1-based index -> multiplicity

    /// Zero multiplicities are dropped. Throws DomainError unless both sides sum to h,
    /// NotACollisionError if u == v.
    CollisionWitness(Counts u, Counts v, std::size_t h);

    const Counts& u() const { return u_; }
    const Counts& v() const { return v_; }
    std::size_t h() const { return h_; }
    std::size_t max_index() const;

    /// sum u_i a_i and sum v_i a_i on the configuration.
    Rational u_sum(const PointConfiguration& config) const;
    Rational v_sum(const PointConfiguration& config) const;
    bool collides_on(const PointConfiguration& config) const { return u_sum(config) == v_sum(config); }

    friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;

private:
    Counts u_;
    Counts v_;
    std::size_t h_;
};

struct Verdict {
    bool is_sidon = true;
    std::size_t h = 0;
    std::optional<CollisionWitness> witness;
    std::optional<WeightVector> weight;
    /// The doubly represented h-fold sum, when not Sidon.
    std::optional<Rational> collision_sum;
};

/// Checks all C(k+h-1, h) multisets of size h for equal sums. On failure the witness is
/// the first repeat in lexicographic order of sorted index tuples: v is the first tuple
/// whose sum was already produced, u the earliest tuple with that sum.
Verdict verify_bruteforce(const PointConfiguration& config, std::size_t h);

/// Checks f_w(a) != 0 for every canonical weight vector; on failure reports the first
/// vanishing form in lexicographic order.
Verdict verify_hyperplane(const PointConfiguration& config, std::size_t h);

/// w = u - v over indices 1..k; k = 0 uses the largest index in the witness.
WeightVector witness_to_weight(const CollisionWitness& witness, std::size_t k = 0);

/// u = w+ and v = w- each padded with h - (positive mass of w) copies of index i0.
/// Throws OrderMismatchError when the positive mass exceeds h, DomainError for a bad i0.
CollisionWitness weight_to_witness(const WeightVector& w, std::size_t h, std::size_t i0);

/// Smallest index of 1..k outside the support of w, or 1 if the support is everything.
std::size_t default_padding_index(const WeightVector& w);

/// weight_to_witness at the default padding index.
CollisionWitness weight_to_witness(const WeightVector& w, std::size_t h);

}  // namespace sidon

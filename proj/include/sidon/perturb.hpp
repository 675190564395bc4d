#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sidon/absolute_value.hpp"
#include "sidon/rational.hpp"
#include "sidon/setops.hpp"

namespace sidon {

/// Shifts x for which some pair of rA + (h-r)(a*+x), sA + (h-s)(a*+x) meets:
/// the union over 0 <= s < r <= h of (1/(r-s)) * (rA - sA) - a*.
FiniteSet forbidden_set(const FiniteSet& a, const Rational& a_star, std::size_t h);

struct PointPerturbation {
    Rational b;
    std::size_t forbidden_size = 0;
    /// Smallest nonzero |c| over the forbidden set; nullopt when there is none.
    std::optional<Magnitude> delta1;
    Rational shift;  // x* = b - a*
};

/// b = a* + x* with 0 < |x*| < min(delta1, delta), so |b - a*| < delta and the sets
/// A_{r,h}(b), r = 0..h, are pairwise disjoint. a* may lie in A.
PointPerturbation perturb_point_detailed(const FiniteSet& a, const Rational& a_star, const Magnitude& delta,
                                         std::size_t h, const AbsoluteValue& av);

Rational perturb_point(const FiniteSet& a, const Rational& a_star, const Magnitude& delta, std::size_t h,
                       const AbsoluteValue& av);

struct PerturbationPlan {
    std::vector<Magnitude> epsilons;
    std::size_t h = 2;
    AbsoluteValue av = AbsoluteValue::archimedean();
    /// Accept repeated alpha entries (each output is still new by construction).
    bool allow_duplicates = false;
};

struct PerturbationStep {
    std::size_t index = 0;  // 1-based
    Rational a;
    Rational b;
    std::size_t forbidden_size = 0;
    std::optional<Magnitude> delta1;  // absent for the first element and when C has no nonzero element
    Rational shift;                   // b - a
    Magnitude displacement;           // |b - a|
};

struct PerturbationResult {
    std::vector<Rational> beta;
    std::vector<PerturbationStep> trace;
};

/// Greedy construction: b_1 = a_1, then each a_{k+1} is moved off every collision
/// hyperplane of {b_1..b_k} by less than eps_{k+1}. Every prefix of beta is h-Sidon.
class Perturber {
public:
    /// Throws DomainError when h = 0.
    Perturber(std::size_t h, AbsoluteValue av, bool allow_duplicates = false);

    /// Places the next element. Throws InvalidPlanError for eps <= 0 and
    /// DuplicateElementError for a repeated a unless duplicates are allowed.
    const PerturbationStep& push(const Rational& a, const Magnitude& epsilon);

    const std::vector<Rational>& beta() const { return beta_; }
    const std::vector<PerturbationStep>& trace() const { return trace_; }
    std::size_t h() const { return h_; }
    const AbsoluteValue& absolute_value() const { return av_; }

private:
    std::size_t h_;
    AbsoluteValue av_;
    bool allow_duplicates_;
    FiniteSet placed_;
    std::map<Rational, std::size_t> inputs_;  // a -> first 1-based index
    std::vector<Rational> beta_;
    std::vector<PerturbationStep> trace_;
};

/// Throws InvalidPlanError when the plan has fewer epsilons than alpha has entries.
PerturbationResult perturb_sequence(const std::vector<Rational>& alpha, const PerturbationPlan& plan);

/// Lazy version of perturb_sequence over an unbounded source.
class PerturbationStream {
public:
    using Source = std::function<std::optional<Rational>()>;
    using Schedule = std::function<Magnitude(std::size_t)>;  // 1-based index -> eps_i

    PerturbationStream(Source source, Schedule epsilons, std::size_t h, AbsoluteValue av,
                       bool allow_duplicates = false);

    /// Next b_i, or nullopt when the source is exhausted.
    std::optional<Rational> next();

    const Perturber& state() const { return perturber_; }

private:
    Source source_;
    Schedule epsilons_;
    Perturber perturber_;
};

/// eps_i = 1/i.
Magnitude harmonic_epsilon(std::size_t index);

}  // namespace sidon

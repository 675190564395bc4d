#include "sidon/perturb.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

using Integers = std::vector<mpz_class>;

void sort_unique(Integers& values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

Integers integer_sumset(const Integers& a, const Integers& b) {
    Integers out;
    out.reserve(a.size() * b.size());
    for (const mpz_class& x : a) {
        for (const mpz_class& y : b) out.emplace_back(x + y);
    }
    sort_unique(out);
    return out;
}

}  // namespace

// All sums are taken over a common denominator so the inner loops add integers; each
// (r, s) block is deduplicated before it is turned back into rationals.
FiniteSet forbidden_set(const FiniteSet& a, const Rational& a_star, std::size_t h) {
    mpz_class common(1);
    for (const Rational& x : a) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.denominator().get_mpz_t());
    Integers scaled;
    scaled.reserve(a.size());
    for (const Rational& x : a) scaled.emplace_back(x.numerator() * (common / x.denominator()));

    std::vector<Integers> multiples;  // multiples[r] = common * rA
    multiples.reserve(h + 1);
    multiples.push_back(Integers{mpz_class(0)});
    for (std::size_t r = 1; r <= h; ++r) multiples.push_back(integer_sumset(multiples.back(), scaled));

    std::vector<Rational> out;
    Integers block;
    for (std::size_t r = 1; r <= h; ++r) {
        for (std::size_t s = 0; s < r; ++s) {
            block.clear();
            block.reserve(multiples[r].size() * multiples[s].size());
            for (const mpz_class& x : multiples[r]) {
                for (const mpz_class& y : multiples[s]) block.emplace_back(x - y);
            }
            sort_unique(block);
            const mpz_class denominator = common * static_cast<unsigned long>(r - s);
            for (const mpz_class& d : block) out.push_back(Rational(d, denominator) - a_star);
        }
    }
    return FiniteSet(std::move(out));
}

PointPerturbation perturb_point_detailed(const FiniteSet& a, const Rational& a_star, const Magnitude& delta,
                                         std::size_t h, const AbsoluteValue& av) {
    if (delta.is_zero()) throw InvalidBoundError("delta must be positive");
    if (h == 0) throw DomainError("order h must be at least 1");
    PointPerturbation result;
    const FiniteSet forbidden = forbidden_set(a, a_star, h);
    result.forbidden_size = forbidden.size();
    result.delta1 = min_nonzero_abs(forbidden.elements(), av);
    const Magnitude bound = result.delta1 ? std::min(*result.delta1, delta) : delta;
    result.shift = small_nonzero_element(bound, av);
    result.b = a_star + result.shift;
    return result;
}

Rational perturb_point(const FiniteSet& a, const Rational& a_star, const Magnitude& delta, std::size_t h,
                       const AbsoluteValue& av) {
    return perturb_point_detailed(a, a_star, delta, h, av).b;
}

Perturber::Perturber(std::size_t h, AbsoluteValue av, bool allow_duplicates)
    : h_(h), av_(av), allow_duplicates_(allow_duplicates) {
    if (h_ == 0) throw DomainError("order h must be at least 1");
}

const PerturbationStep& Perturber::push(const Rational& a, const Magnitude& epsilon) {
    const std::size_t index = beta_.size() + 1;
    if (epsilon.is_zero()) throw InvalidPlanError("epsilon_" + std::to_string(index) + " must be positive");
    const auto [seen, fresh] = inputs_.try_emplace(a, index);
    if (!fresh && !allow_duplicates_) throw DuplicateElementError(seen->second, index, a.to_string());

    PerturbationStep step;
    step.index = index;
    step.a = a;
    if (beta_.empty()) {
        step.b = a;
    } else {
        PointPerturbation moved = perturb_point_detailed(placed_, a, epsilon, h_, av_);
        step.b = std::move(moved.b);
        step.forbidden_size = moved.forbidden_size;
        step.delta1 = std::move(moved.delta1);
    }
    step.shift = step.b - a;
    step.displacement = abs_value(step.shift, av_);

    placed_ = set_union(placed_, FiniteSet{step.b});
    beta_.push_back(step.b);
    trace_.push_back(std::move(step));
    return trace_.back();
}

PerturbationResult perturb_sequence(const std::vector<Rational>& alpha, const PerturbationPlan& plan) {
    if (plan.epsilons.size() < alpha.size()) {
        throw InvalidPlanError("plan has " + std::to_string(plan.epsilons.size()) + " epsilons for " +
                               std::to_string(alpha.size()) + " points");
    }
    for (std::size_t i = 0; i < plan.epsilons.size(); ++i) {
        if (plan.epsilons[i].is_zero()) throw InvalidPlanError("epsilon_" + std::to_string(i + 1) + " must be positive");
    }
    Perturber perturber(plan.h, plan.av, plan.allow_duplicates);
    for (std::size_t i = 0; i < alpha.size(); ++i) perturber.push(alpha[i], plan.epsilons[i]);
    return PerturbationResult{perturber.beta(), perturber.trace()};
}

PerturbationStream::PerturbationStream(Source source, Schedule epsilons, std::size_t h, AbsoluteValue av,
                                       bool allow_duplicates)
    : source_(std::move(source)), epsilons_(std::move(epsilons)), perturber_(h, av, allow_duplicates) {}

std::optional<Rational> PerturbationStream::next() {
    std::optional<Rational> a = source_();
    if (!a) return std::nullopt;
    const std::size_t index = perturber_.beta().size() + 1;
    return perturber_.push(*a, epsilons_(index)).b;
}

Magnitude harmonic_epsilon(std::size_t index) { return Magnitude(Rational(1, static_cast<long>(index))); }

}  // namespace sidon

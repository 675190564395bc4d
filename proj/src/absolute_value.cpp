#include "sidon/absolute_value.hpp"

#include <utility>

#include "sidon/errors.hpp"

namespace sidon {

Magnitude::Magnitude(Rational value) : value_(std::move(value)) {
    if (value_.sign() < 0) throw InvalidBoundError("negative magnitude " + value_.to_string());
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(make_integer(n).get_mpz_t(), 40) != 0;
}

AbsoluteValue AbsoluteValue::p_adic(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("p-adic absolute value needs a prime, got " + std::to_string(p));
    return AbsoluteValue(Kind::p_adic, p);
}

std::string AbsoluteValue::describe() const {
    if (kind_ == Kind::archimedean) return "archimedean";
    return "p-adic(" + std::to_string(prime_) + ")";
}

namespace {

std::int64_t remove_factor(const mpz_class& n, const mpz_class& p) {
    mpz_class rest;
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

std::int64_t p_adic_valuation(const Rational& x, std::uint64_t p) {
    if (x.is_zero()) throw DomainError("valuation of zero");
    const mpz_class pz = make_integer(p);
    return remove_factor(x.numerator(), pz) - remove_factor(x.denominator(), pz);
}

Magnitude abs_value(const Rational& x, const AbsoluteValue& av) {
    if (x.is_zero()) return Magnitude(Rational(0));
    if (av.kind() == AbsoluteValue::Kind::archimedean) return Magnitude(x.abs());
    const Rational p(make_integer(av.prime()));
    return Magnitude(power(p, -p_adic_valuation(x, av.prime())));
}

Rational small_nonzero_element(const Magnitude& bound, const AbsoluteValue& av) {
    if (bound.is_zero()) throw InvalidBoundError("bound must be positive");
    const Rational& m = bound.value();
    if (av.kind() == AbsoluteValue::Kind::archimedean) return m / Rational(2);

    // Smallest e with p^-e < m. Walk from e = 0 in whichever direction is needed.
    const Rational p(make_integer(av.prime()));
    const Rational p_inv = p.inverse();
    Rational size(1);  // p^-e
    if (size < m) {
        while (size * p < m) size *= p;  // e - 1 still works
    } else {
        while (!(size < m)) size *= p_inv;
    }
    return size.inverse();  // |p^e|_p = p^-e
}

std::optional<Magnitude> min_nonzero_abs(std::span<const Rational> values, const AbsoluteValue& av) {
    std::optional<Magnitude> best;
    for (const Rational& c : values) {
        if (c.is_zero()) continue;
        Magnitude size = abs_value(c, av);
        if (!best || size < *best) best = std::move(size);
    }
    return best;
}

}  // namespace sidon

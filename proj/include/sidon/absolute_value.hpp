#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sidon/rational.hpp"

namespace sidon {

/// A nonnegative exact size |x| under some absolute value.
class Magnitude {
public:
    Magnitude() = default;
    /// Throws InvalidBoundError when value < 0.
    explicit Magnitude(Rational value);

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    friend bool operator==(const Magnitude&, const Magnitude&) = default;
    friend auto operator<=>(const Magnitude& a, const Magnitude& b) { return a.value_ <=> b.value_; }

private:
    Rational value_;
};

/// Archimedean |.| or the p-adic |.|_p on Q. The trivial absolute value is not representable.
class AbsoluteValue {
public:
    enum class Kind { archimedean, p_adic };

    static AbsoluteValue archimedean() { return AbsoluteValue(Kind::archimedean, 0); }
    /// Throws DomainError unless p is prime.
    static AbsoluteValue p_adic(std::uint64_t p);

    Kind kind() const { return kind_; }
    /// The prime; 0 for the archimedean kind.
    std::uint64_t prime() const { return prime_; }

    /// "archimedean" or "p-adic(5)".
    std::string describe() const;

    friend bool operator==(const AbsoluteValue&, const AbsoluteValue&) = default;

private:
    AbsoluteValue(Kind kind, std::uint64_t prime) : kind_(kind), prime_(prime) {}

    Kind kind_;
    std::uint64_t prime_;
};

bool is_prime(std::uint64_t n);

/// Exponent of p in x. x must be nonzero.
std::int64_t p_adic_valuation(const Rational& x, std::uint64_t p);

Magnitude abs_value(const Rational& x, const AbsoluteValue& av);

/// Deterministic x with 0 < |x| < bound: bound/2 archimedean, p^e with e minimal p-adically.
Rational small_nonzero_element(const Magnitude& bound, const AbsoluteValue& av);

/// min |c| over the nonzero c; nullopt stands for "infinite" (no nonzero element).
std::optional<Magnitude> min_nonzero_abs(std::span<const Rational> values, const AbsoluteValue& av);

}  // namespace sidon

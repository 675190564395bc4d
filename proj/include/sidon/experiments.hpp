#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "sidon/configuration.hpp"
#include "sidon/rational.hpp"

namespace sidon {

/// Where random configurations come from: distinct integers of {1..N}, or rationals
/// p/q with p uniform in [-M, M] and q uniform in [1, M].
struct SamplerSpec {
    enum class Kind { integer_grid, random_rational };

    Kind kind = Kind::random_rational;
    std::uint64_t bound = 1;  // N or M
    std::uint64_t seed = 0;

    static SamplerSpec grid(std::uint64_t n, std::uint64_t seed = 0) { return {Kind::integer_grid, n, seed}; }
    static SamplerSpec rational(std::uint64_t m, std::uint64_t seed = 0) { return {Kind::random_rational, m, seed}; }

    /// "grid:<N>" or "rational:<M>". Throws ParseError.
    static SamplerSpec parse(std::string_view text, std::uint64_t seed);
    std::string describe() const;
};

struct DensityReport {
    std::size_t k = 0;
    std::size_t h = 0;
    std::uint64_t trials = 0;
    std::uint64_t sidon_count = 0;
    Rational fraction;
    std::uint64_t seed = 0;
    std::string sampler;
    bool exhaustive = false;
};

/// Deterministic in (spec.seed, trial): each trial draws from its own generator stream.
/// Throws SamplerError when k distinct points cannot be drawn.
PointConfiguration sample_configuration(std::size_t k, const SamplerSpec& spec, std::uint64_t trial = 0);

/// Fraction of `trials` sampled configurations that are h-Sidon.
DensityReport sidon_density(std::size_t k, std::size_t h, std::uint64_t trials, const SamplerSpec& spec);

/// Exact fraction of the k-subsets of {1..N} that are h-Sidon. Throws BudgetError when
/// C(N, k) exceeds max_subsets.
DensityReport exact_grid_density(std::uint64_t n, std::size_t k, std::size_t h,
                                 std::uint64_t max_subsets = 2'000'000);

/// 64-bit generator keyed by (seed, stream); the same key always yields the same sequence.
class SplitMix64 {
public:
    SplitMix64(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    /// Uniform on [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

}  // namespace sidon

#include "sidon/experiments.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sidon/errors.hpp"
#include "sidon/verify.hpp"

namespace sidon {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr int kMaxRedraws = 1000;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void require_order(std::size_t h) {
    if (h == 0) throw DomainError("order h must be at least 1");
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed) ^ mix(stream + kGolden)) {}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
}

SamplerSpec SamplerSpec::parse(std::string_view text, std::uint64_t seed) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("sampler must be grid:<N> or rational:<M>, got '" + std::string(text) + "'");
    const std::string_view name = text.substr(0, colon);
    const std::uint64_t bound = parse_u64(text.substr(colon + 1), "sampler bound");
    if (name == "grid") return grid(bound, seed);
    if (name == "rational") return rational(bound, seed);
    throw ParseError("unknown sampler '" + std::string(name) + "'");
}

std::string SamplerSpec::describe() const {
    return (kind == Kind::integer_grid ? "grid:" : "rational:") + std::to_string(bound);
}

PointConfiguration sample_configuration(std::size_t k, const SamplerSpec& spec, std::uint64_t trial) {
    if (k == 0) throw DomainError("sample size k must be at least 1");
    SplitMix64 rng(spec.seed, trial);
    std::vector<Rational> points;
    points.reserve(k);

    if (spec.kind == SamplerSpec::Kind::integer_grid) {
        if (spec.bound < k) {
            throw SamplerError("grid:" + std::to_string(spec.bound) + " has fewer than " + std::to_string(k) + " points");
        }
        // Partial Fisher-Yates over {1..N}, storing only the displaced slots.
        std::map<std::uint64_t, std::uint64_t> swapped;
        auto slot = [&](std::uint64_t i) {
            const auto it = swapped.find(i);
            return it == swapped.end() ? i : it->second;
        };
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t j = i + rng.below(spec.bound - i);
            const std::uint64_t picked = slot(j);
            swapped[j] = slot(i);
            points.emplace_back(make_integer(picked + 1));
        }
        return PointConfiguration::validate(std::move(points));
    }

    if (spec.bound == 0 || spec.bound > (std::uint64_t{1} << 62)) {
        throw SamplerError("rational sampler bound must be in [1, 2^62]");
    }
    const mpz_class m = make_integer(spec.bound);
    std::set<Rational> drawn;
    while (points.size() < k) {
        int attempts = 0;
        while (true) {
            if (++attempts > kMaxRedraws) {
                throw SamplerError("could not draw " + std::to_string(k) + " distinct points from " + spec.describe());
            }
            const mpz_class num = make_integer(rng.below(2 * spec.bound + 1)) - m;
            const mpz_class den = make_integer(rng.below(spec.bound) + 1);
            Rational q(num, den);
            if (drawn.insert(q).second) {
                points.push_back(std::move(q));
                break;
            }
        }
    }
    return PointConfiguration::validate(std::move(points));
}

DensityReport sidon_density(std::size_t k, std::size_t h, std::uint64_t trials, const SamplerSpec& spec) {
    require_order(h);
    if (trials == 0) throw DomainError("trials must be at least 1");
    DensityReport report;
    report.k = k;
    report.h = h;
    report.trials = trials;
    report.seed = spec.seed;
    report.sampler = spec.describe();
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (verify_bruteforce(sample_configuration(k, spec, t), h).is_sidon) ++report.sidon_count;
    }
    report.fraction = Rational(make_integer(report.sidon_count), make_integer(trials));
    return report;
}

DensityReport exact_grid_density(std::uint64_t n, std::size_t k, std::size_t h, std::uint64_t max_subsets) {
    require_order(h);
    if (k == 0) throw DomainError("subset size k must be at least 1");
    if (n < k) throw SamplerError("grid:" + std::to_string(n) + " has fewer than " + std::to_string(k) + " points");

    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), n, k);
    if (count > make_integer(max_subsets)) {
        throw BudgetError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + count.get_str() +
                          " subsets exceeds the budget of " + std::to_string(max_subsets));
    }

    DensityReport report;
    report.k = k;
    report.h = h;
    report.sampler = "grid:" + std::to_string(n);
    report.exhaustive = true;

    std::vector<std::uint64_t> subset(k);
    std::iota(subset.begin(), subset.end(), std::uint64_t{1});
    while (true) {
        std::vector<Rational> points;
        points.reserve(k);
        for (std::uint64_t v : subset) points.emplace_back(make_integer(v));
        if (verify_bruteforce(PointConfiguration::validate(std::move(points)), h).is_sidon) ++report.sidon_count;
        ++report.trials;

        std::size_t pos = k;
        while (pos > 0 && subset[pos - 1] == n - (k - pos)) --pos;
        if (pos == 0) break;
        ++subset[pos - 1];
        for (std::size_t j = pos; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    report.fraction = Rational(make_integer(report.sidon_count), make_integer(report.trials));
    return report;
}

}  // namespace sidon

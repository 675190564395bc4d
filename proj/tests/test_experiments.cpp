#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sidon/errors.hpp"
#include "sidon/experiments.hpp"
#include "sidon/verify.hpp"
#include "test_support.hpp"

using namespace sidon;
using sidon::testing::q;

TEST_CASE("sample_configuration") {
    CHECK(sample_configuration(1, SamplerSpec::rational(10, 4)).size() == 1);

    const auto forced = sample_configuration(3, SamplerSpec::grid(3, 99));
    std::vector<Rational> sorted(forced.points().begin(), forced.points().end());
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == sidon::testing::ints({1, 2, 3}));

    const auto spec = SamplerSpec::rational(std::uint64_t{1} << 32, 12345);
    CHECK(sample_configuration(5, spec, 7) == sample_configuration(5, spec, 7));
    CHECK_FALSE(sample_configuration(5, spec, 7) == sample_configuration(5, spec, 8));

    CHECK_THROWS_AS(sample_configuration(4, SamplerSpec::grid(3)), SamplerError);
    // Only -1, 0, 1 are reachable with M = 1.
    CHECK_THROWS_AS(sample_configuration(4, SamplerSpec::rational(1)), SamplerError);
    CHECK(sample_configuration(3, SamplerSpec::rational(1)).size() == 3);
}

TEST_CASE("rational sampler stays inside its box") {
    const auto spec = SamplerSpec::rational(5, 3);
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto config = sample_configuration(4, spec, t);
        for (const Rational& x : config.points()) {
            CHECK(x.abs() <= Rational(5));
            CHECK(x.denominator() <= 5);
        }
    }
}

TEST_CASE("grid sampler is roughly uniform") {
    std::vector<int> hits(10, 0);
    const auto spec = SamplerSpec::grid(10, 1);
    for (std::uint64_t t = 0; t < 5000; ++t) {
        const auto config = sample_configuration(3, spec, t);
        for (const Rational& x : config.points()) ++hits[x.numerator().get_ui() - 1];
    }
    // Expected 1500 per value; a 5-sigma band is about +-180.
    for (int h : hits) {
        CHECK(h > 1300);
        CHECK(h < 1700);
    }
}

TEST_CASE("SplitMix64 below is in range and keyed") {
    SplitMix64 a(1, 2);
    SplitMix64 b(1, 2);
    SplitMix64 c(1, 3);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.below(17);
        CHECK(x < 17);
        CHECK(x == b.below(17));
        differs |= x != c.below(17);
    }
    CHECK(differs);
}

TEST_CASE("sidon_density") {
    const auto singleton = sidon_density(1, 3, 20, SamplerSpec::rational(100, 1));
    CHECK(singleton.fraction == Rational(1));
    CHECK(singleton.sidon_count == 20);

    const auto spec = SamplerSpec::rational(50, 9);
    const auto first = sidon_density(4, 2, 300, spec);
    const auto second = sidon_density(4, 2, 300, spec);
    CHECK(first.sidon_count == second.sidon_count);
    CHECK(first.fraction == Rational(static_cast<long>(first.sidon_count), 300));

    // (h+1)-Sidon implies h-Sidon, and the samples do not depend on h.
    const auto spec_small = SamplerSpec::grid(12, 5);
    for (std::size_t h = 1; h <= 3; ++h) {
        CHECK(sidon_density(4, h + 1, 200, spec_small).sidon_count <= sidon_density(4, h, 200, spec_small).sidon_count);
    }
    CHECK_THROWS_AS(sidon_density(4, 2, 0, spec), DomainError);
    CHECK_THROWS_AS(sidon_density(5, 2, 10, SamplerSpec::grid(4)), SamplerError);
}

TEST_CASE("exact_grid_density examples") {
    const auto report = exact_grid_density(4, 3, 2);
    CHECK(report.fraction == q("1/2"));
    CHECK(report.trials == 4);
    CHECK(report.sidon_count == 2);
    CHECK(report.exhaustive);

    for (std::uint64_t k = 3; k <= 6; ++k) CHECK(exact_grid_density(k, k, 2).fraction == Rational(0));
    for (std::size_t h = 1; h <= 5; ++h) CHECK(exact_grid_density(2, 2, h).fraction == Rational(1));

    CHECK_THROWS_AS(exact_grid_density(40, 10, 2, 1000), BudgetError);
    CHECK_THROWS_AS(exact_grid_density(2, 3, 2), SamplerError);
}

TEST_CASE("exact grid density agrees with the hyperplane verifier over all subsets") {
    for (std::uint64_t n = 3; n <= 9; ++n) {
        for (std::size_t k = 2; k <= 4 && k <= n; ++k) {
            for (std::size_t h = 2; h <= 3; ++h) {
                std::vector<bool> pick(n, false);
                std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
                std::uint64_t total = 0;
                std::uint64_t good = 0;
                do {
                    std::vector<Rational> pts;
                    for (std::uint64_t i = 0; i < n; ++i) {
                        if (pick[i]) pts.emplace_back(static_cast<long>(i + 1));
                    }
                    ++total;
                    if (verify_hyperplane(PointConfiguration::validate(pts), h).is_sidon) ++good;
                } while (std::prev_permutation(pick.begin(), pick.end()));
                const auto report = exact_grid_density(n, k, h);
                CHECK(report.trials == total);
                CHECK(report.sidon_count == good);
            }
        }
    }
}

TEST_CASE("sampler spec parsing") {
    CHECK(SamplerSpec::parse("grid:7", 1).describe() == "grid:7");
    CHECK(SamplerSpec::parse("rational:4294967296", 1).bound == (std::uint64_t{1} << 32));
    for (const char* bad : {"grid", "grid:", "grid:x", "cube:3", "grid:-1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(SamplerSpec::parse(bad, 0), ParseError);
    }
}

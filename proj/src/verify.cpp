#include "sidon/verify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

std::size_t total(const CollisionWitness::Counts& counts) {
    std::size_t sum = 0;
    for (const auto& [index, mult] : counts) sum += mult;
    return sum;
}

CollisionWitness::Counts without_zeros(CollisionWitness::Counts counts) {
    std::erase_if(counts, [](const auto& entry) { return entry.second == 0; });
    return counts;
}

Rational weighted_sum(const CollisionWitness::Counts& counts, const PointConfiguration& config) {
    Rational sum(0);
    for (const auto& [index, mult] : counts) {
        if (index < 1 || index > config.size()) {
            throw DomainError("witness index " + std::to_string(index) + " outside configuration of size " +
                              std::to_string(config.size()));
        }
        sum += Rational(static_cast<long>(mult)) * config.at(index);
    }
    return sum;
}

CollisionWitness::Counts counts_of(const std::vector<std::size_t>& tuple) {
    CollisionWitness::Counts counts;
    for (std::size_t i : tuple) ++counts[i + 1];
    return counts;
}

void require_order(std::size_t h) {
    if (h == 0) throw DomainError("order h must be at least 1");
}

}  // namespace

CollisionWitness::CollisionWitness(Counts u, Counts v, std::size_t h)
    : u_(without_zeros(std::move(u))), v_(without_zeros(std::move(v))), h_(h) {
    if (total(u_) != h_ || total(v_) != h_) {
        throw DomainError("witness multiplicities must each sum to h=" + std::to_string(h_));
    }
    if (u_ == v_) throw NotACollisionError("u and v are the same multiset");
    if ((!u_.empty() && u_.begin()->first == 0) || (!v_.empty() && v_.begin()->first == 0)) {
        throw DomainError("witness indices are 1-based");
    }
}

std::size_t CollisionWitness::max_index() const {
    std::size_t m = 0;
    if (!u_.empty()) m = std::max(m, u_.rbegin()->first);
    if (!v_.empty()) m = std::max(m, v_.rbegin()->first);
    return m;
}

Rational CollisionWitness::u_sum(const PointConfiguration& config) const { return weighted_sum(u_, config); }
Rational CollisionWitness::v_sum(const PointConfiguration& config) const { return weighted_sum(v_, config); }

Verdict verify_bruteforce(const PointConfiguration& config, std::size_t h) {
    require_order(h);
    const std::size_t k = config.size();
    Verdict verdict;
    verdict.h = h;

    // Nondecreasing index tuples in lexicographic order, with prefix sums alongside.
    std::vector<std::size_t> tuple(h, 0);
    std::vector<Rational> prefix(h + 1, Rational(0));
    for (std::size_t j = 0; j < h; ++j) prefix[j + 1] = prefix[j] + config.at(1);

    std::map<Rational, std::vector<std::size_t>> seen;
    while (true) {
        const Rational& sum = prefix[h];
        auto [it, inserted] = seen.try_emplace(sum, tuple);
        if (!inserted) {
            CollisionWitness witness(counts_of(it->second), counts_of(tuple), h);
            verdict.is_sidon = false;
            verdict.weight = witness_to_weight(witness, k);
            verdict.collision_sum = sum;
            verdict.witness = std::move(witness);
            return verdict;
        }
        // Advance: bump the last position that is not yet at k - 1, reset the tail to it.
        std::size_t pos = h;
        while (pos > 0 && tuple[pos - 1] == k - 1) --pos;
        if (pos == 0) break;
        const std::size_t value = tuple[pos - 1] + 1;
        for (std::size_t j = pos - 1; j < h; ++j) {
            tuple[j] = value;
            prefix[j + 1] = prefix[j] + config.points()[value];
        }
    }
    return verdict;
}

Verdict verify_hyperplane(const PointConfiguration& config, std::size_t h) {
    require_order(h);
    Verdict verdict;
    verdict.h = h;
    for_each_weight_vector(config.size(), h, true, [&](const WeightVector& w) {
        if (!evaluate_form(w, config).is_zero()) return true;
        verdict.is_sidon = false;
        verdict.weight = w;
        return false;
    });
    if (!verdict.is_sidon) {
        CollisionWitness witness = weight_to_witness(*verdict.weight, h);
        verdict.collision_sum = witness.u_sum(config);
        verdict.witness = std::move(witness);
    }
    return verdict;
}

WeightVector witness_to_weight(const CollisionWitness& witness, std::size_t k) {
    if (witness.u() == witness.v()) throw NotACollisionError("u and v are the same multiset");
    const std::size_t span = k == 0 ? witness.max_index() : k;
    if (witness.max_index() > span) throw DomainError("witness index exceeds the index set size");
    std::vector<std::int64_t> coefficients(span, 0);
    for (const auto& [index, mult] : witness.u()) coefficients[index - 1] += static_cast<std::int64_t>(mult);
    for (const auto& [index, mult] : witness.v()) coefficients[index - 1] -= static_cast<std::int64_t>(mult);
    return WeightVector(witness.h(), std::move(coefficients));
}

CollisionWitness weight_to_witness(const WeightVector& w, std::size_t h, std::size_t i0) {
    const std::int64_t mass = w.positive_mass();
    if (mass > static_cast<std::int64_t>(h)) {
        throw OrderMismatchError("weight positive mass " + std::to_string(mass) + " exceeds h=" + std::to_string(h));
    }
    if (i0 < 1 || i0 > w.k()) throw DomainError("padding index " + std::to_string(i0) + " out of range");
    const auto padding = static_cast<std::size_t>(static_cast<std::int64_t>(h) - mass);
    CollisionWitness::Counts u;
    CollisionWitness::Counts v;
    for (std::size_t i = 1; i <= w.k(); ++i) {
        if (w[i] > 0) u[i] += static_cast<std::size_t>(w[i]);
        if (w[i] < 0) v[i] += static_cast<std::size_t>(-w[i]);
    }
    if (padding > 0) {
        u[i0] += padding;
        v[i0] += padding;
    }
    return CollisionWitness(std::move(u), std::move(v), h);
}

std::size_t default_padding_index(const WeightVector& w) {
    for (std::size_t i = 1; i <= w.k(); ++i) {
        if (w[i] == 0) return i;
    }
    return 1;
}

CollisionWitness weight_to_witness(const WeightVector& w, std::size_t h) {
    return weight_to_witness(w, h, default_padding_index(w));
}

}  // namespace sidon

#include "sidon/setops.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

std::vector<Rational> normalized(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

FiniteSet::FiniteSet(std::initializer_list<Rational> values) : elements_(normalized(std::vector<Rational>(values))) {}

FiniteSet::FiniteSet(std::vector<Rational> values) : elements_(normalized(std::move(values))) {}

bool FiniteSet::contains(const Rational& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet(std::move(out));
}

FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Rational> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet(std::move(out));
}

FiniteSet translate(const FiniteSet& a, const Rational& c) {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const Rational& x : a) out.push_back(x + c);
    return FiniteSet(std::move(out));
}

FiniteSet dilate(const Rational& c, const FiniteSet& a) {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const Rational& x : a) out.push_back(c * x);
    return FiniteSet(std::move(out));
}

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Rational> out;
    out.reserve(a.size() * b.size());
    for (const Rational& x : a) {
        for (const Rational& y : b) out.push_back(x + y);
    }
    return FiniteSet(std::move(out));
}

FiniteSet difference_set(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Rational> out;
    out.reserve(a.size() * b.size());
    for (const Rational& x : a) {
        for (const Rational& y : b) out.push_back(x - y);
    }
    return FiniteSet(std::move(out));
}

// Built one summand at a time; deduplicating after each step gives the same set as
// enumerating all C(k+h-1, h) multisets but keeps the working set small.
FiniteSet h_fold_sumset(const FiniteSet& a, std::size_t h) {
    FiniteSet acc{Rational(0)};
    for (std::size_t i = 0; i < h; ++i) acc = sumset(acc, a);
    return acc;
}

FiniteSet r_s_sum_difference(const FiniteSet& a, std::size_t r, std::size_t s) {
    return difference_set(h_fold_sumset(a, r), h_fold_sumset(a, s));
}

FiniteSet shifted_sumset(const FiniteSet& a, const Rational& b, std::size_t r, std::size_t h) {
    if (r > h) {
        throw DomainError("shifted sumset needs 0 <= r <= h, got r=" + std::to_string(r) + " h=" + std::to_string(h));
    }
    const Rational shift = Rational(static_cast<long>(h - r)) * b;
    return translate(h_fold_sumset(a, r), shift);
}

}  // namespace sidon

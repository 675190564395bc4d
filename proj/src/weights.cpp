#include "sidon/weights.hpp"

#include <algorithm>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

WeightVector::WeightVector(std::size_t h, std::vector<std::int64_t> coefficients)
    : h_(h), coefficients_(std::move(coefficients)) {
    std::int64_t positive = 0;
    std::int64_t negative = 0;
    for (std::int64_t c : coefficients_) {
        if (c > 0) {
            positive += c;
        } else {
            negative -= c;
        }
    }
    if (positive == 0 && negative == 0) throw DomainError("weight vector has empty support");
    if (positive != negative) throw DomainError("weight vector coefficients do not sum to zero");
    if (positive > static_cast<std::int64_t>(h)) {
        throw DomainError("weight vector positive mass " + std::to_string(positive) + " exceeds h=" + std::to_string(h));
    }
}

std::vector<std::size_t> WeightVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] != 0) out.push_back(i + 1);
    }
    return out;
}

std::int64_t WeightVector::positive_mass() const {
    std::int64_t total = 0;
    for (std::int64_t c : coefficients_) total += std::max<std::int64_t>(c, 0);
    return total;
}

WeightVector WeightVector::negated() const {
    std::vector<std::int64_t> out(coefficients_.size());
    std::transform(coefficients_.begin(), coefficients_.end(), out.begin(), [](std::int64_t c) { return -c; });
    return WeightVector(h_, std::move(out));
}

WeightVector WeightVector::embedded(std::size_t new_k) const {
    if (new_k < k()) throw DomainError("cannot embed weight vector into a smaller index set");
    std::vector<std::int64_t> out = coefficients_;
    out.resize(new_k, 0);
    return WeightVector(h_, std::move(out));
}

WeightVector WeightVector::with_order(std::size_t new_h) const { return WeightVector(new_h, coefficients_); }

bool WeightVector::is_canonical() const {
    const auto first = std::find_if(coefficients_.begin(), coefficients_.end(), [](std::int64_t c) { return c != 0; });
    return first != coefficients_.end() && *first > 0;
}

namespace {

// Depth-first over coordinates with the running positive and negative masses kept
// within h, so only branches that can still close to a valid vector are explored.
class WeightWalker {
public:
    WeightWalker(std::size_t k, std::size_t h, bool canonical,
                 const std::function<bool(const WeightVector&)>& visit)
        : k_(k), h_(static_cast<std::int64_t>(h)), canonical_(canonical), visit_(visit), current_(k, 0) {}

    void run() { descend(0, 0, 0, false); }

private:
    bool descend(std::size_t pos, std::int64_t positive, std::int64_t negative, bool seen_nonzero) {
        if (pos == k_) {
            if (positive == 0 || positive != negative) return true;
            return visit_(WeightVector(static_cast<std::size_t>(h_), current_));
        }
        const std::size_t remaining = k_ - pos - 1;
        const std::int64_t low = (canonical_ && !seen_nonzero) ? 0 : -(h_ - negative);
        const std::int64_t high = h_ - positive;
        for (std::int64_t c = low; c <= high; ++c) {
            const std::int64_t p = positive + std::max<std::int64_t>(c, 0);
            const std::int64_t n = negative + std::max<std::int64_t>(-c, 0);
            // The imbalance must be absorbable by the coordinates still to come.
            if (p != n && remaining == 0) continue;
            if (p > n && p > h_) continue;
            if (n > p && n > h_) continue;
            current_[pos] = c;
            if (!descend(pos + 1, p, n, seen_nonzero || c != 0)) return false;
        }
        current_[pos] = 0;
        return true;
    }

    std::size_t k_;
    std::int64_t h_;
    bool canonical_;
    const std::function<bool(const WeightVector&)>& visit_;
    std::vector<std::int64_t> current_;
};

}  // namespace

void for_each_weight_vector(std::size_t k, std::size_t h, bool canonical,
                            const std::function<bool(const WeightVector&)>& visit) {
    if (k == 0 || h == 0) return;
    WeightWalker(k, h, canonical, visit).run();
}

std::vector<WeightVector> enumerate_weight_vectors(std::size_t k, std::size_t h, bool canonical) {
    std::vector<WeightVector> out;
    for_each_weight_vector(k, h, canonical, [&](const WeightVector& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

Rational evaluate_form(const WeightVector& w, std::span<const Rational> points) {
    const auto support = w.support();
    if (!support.empty() && support.back() > points.size()) {
        throw DomainError("weight index " + std::to_string(support.back()) + " outside configuration of size " +
                          std::to_string(points.size()));
    }
    Rational total(0);
    for (std::size_t i : support) total += Rational(static_cast<long>(w[i])) * points[i - 1];
    return total;
}

Rational evaluate_form(const WeightVector& w, const PointConfiguration& config) {
    return evaluate_form(w, config.points());
}

bool hyperplane_member(const WeightVector& w, const PointConfiguration& config) {
    return evaluate_form(w, config).is_zero();
}

}  // namespace sidon

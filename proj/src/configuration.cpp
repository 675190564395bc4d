#include "sidon/configuration.hpp"

#include <algorithm>
#include <numeric>

#include "sidon/errors.hpp"

namespace sidon {

PointConfiguration PointConfiguration::validate(std::vector<Rational> points) {
    if (points.empty()) throw EmptyInputError("configuration needs at least one point");
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
    // Report the duplicate pair with the smallest second index.
    std::size_t best_first = 0;
    std::size_t best_second = 0;
    for (std::size_t n = 1; n < order.size(); ++n) {
        if (points[order[n]] == points[order[n - 1]]) {
            const std::size_t first = std::min(order[n], order[n - 1]);
            const std::size_t second = std::max(order[n], order[n - 1]);
            if (best_second == 0 || second < best_second) {
                best_first = first + 1;
                best_second = second + 1;
            }
        }
    }
    if (best_second != 0) throw DuplicateElementError(best_first, best_second, points[best_first - 1].to_string());
    return PointConfiguration(std::move(points));
}

PointConfiguration PointConfiguration::subsequence(std::span<const std::size_t> indices) const {
    std::vector<Rational> picked;
    picked.reserve(indices.size());
    for (std::size_t i : indices) picked.push_back(at(i));
    return validate(std::move(picked));
}

}  // namespace sidon

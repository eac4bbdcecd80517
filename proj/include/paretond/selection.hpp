#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "paretond/types.hpp"

namespace paretond {

/// Value at 0-based rank k of the sorted order, via introspective selection.
inline double select_kth(std::span<const double> values, std::size_t k) {
    if (values.empty()) throw std::invalid_argument("select_kth: empty input");
    if (k >= values.size()) throw std::invalid_argument("select_kth: rank out of range");
    std::vector<double> scratch(values.begin(), values.end());
    std::nth_element(scratch.begin(), scratch.begin() + k, scratch.end());
    return scratch[k];
}

struct Quartiles {
    double q1;
    double q2;
    double q3;
};

namespace detail {

// Nearest-rank quartiles on a scratch buffer the caller owns; partitions in
// place so the three selections stay linear overall.
inline Quartiles quartiles_inplace(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t i2 = n / 2;
    const std::size_t i1 = n / 4;
    const std::size_t i3 = 3 * n / 4;
    std::nth_element(v.begin(), v.begin() + i2, v.end());
    const double q2 = v[i2];
    std::nth_element(v.begin(), v.begin() + i1, v.begin() + i2);
    const double q1 = i1 == i2 ? q2 : v[i1];
    std::nth_element(v.begin() + i2, v.begin() + i3, v.end());
    const double q3 = v[i3];
    return {q1, q2, q3};
}

}  // namespace detail

/// Quartiles at 0-based nearest ranks floor(n/4), floor(n/2), floor(3n/4).
inline Quartiles quartiles(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("quartiles: empty input");
    std::vector<double> scratch(values.begin(), values.end());
    return detail::quartiles_inplace(scratch);
}

}  // namespace paretond

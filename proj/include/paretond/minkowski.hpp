#pragma once

#include <stdexcept>
#include <vector>

#include "paretond/dominance.hpp"
#include "paretond/types.hpp"

namespace paretond {

/// All component-wise sums a_i + b_j, deduplicated.
inline PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("minkowski_sum: dimensionality mismatch");
    const std::size_t d = a.dim();
    PointSet sums(d);
    sums.reserve(a.size() * b.size());
    std::vector<double> tmp(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::span<const double> p = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::span<const double> q = b[j];
            for (std::size_t k = 0; k < d; ++k) tmp[k] = p[k] + q[k];
            sums.push_back(tmp);
        }
    }
    return dedup(sums);
}

}  // namespace paretond

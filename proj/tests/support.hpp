#pragma once

// Shared helpers for the test suites: order-insensitive set comparison, brute
// force dominance scans independent of the tree code, and random data.

#include <algorithm>
#include <span>
#include <vector>

#include "paretond/dominance.hpp"
#include "paretond/rng.hpp"
#include "paretond/types.hpp"

namespace test_support {

using paretond::DimMask;
using paretond::PointSet;
using paretond::Rng;

inline std::vector<std::vector<double>> sorted_rows(const PointSet& s) {
    std::vector<std::vector<double>> rows;
    rows.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::span<const double> p = s[i];
        rows.emplace_back(p.begin(), p.end());
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

inline bool set_equals(const PointSet& a, const PointSet& b) {
    return a.dim() == b.dim() && sorted_rows(a) == sorted_rows(b);
}

// linear scan, independent of the index trees
inline bool brute_dominated(const PointSet& s, std::span<const double> q, DimMask mask = {}) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (paretond::dominates(s[i], q, mask)) return true;
    }
    return false;
}

inline PointSet random_set(Rng& rng, std::size_t n, std::size_t d, double lo = 0.0,
                           double hi = 1.0) {
    PointSet out(d);
    std::vector<double> p(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) p[k] = rng.uniform(lo, hi);
        out.push_back(p);
    }
    return out;
}

// random set over a small integer grid, which makes duplicates and plateaus likely
inline PointSet random_grid_set(Rng& rng, std::size_t n, std::size_t d, std::uint64_t grid) {
    PointSet out(d);
    std::vector<double> p(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) p[k] = static_cast<double>(rng.below(grid));
        out.push_back(p);
    }
    return out;
}

inline PointSet random_pareto(Rng& rng, std::size_t n, std::size_t d, std::uint64_t grid = 0) {
    PointSet raw = grid ? random_grid_set(rng, n, d, grid) : random_set(rng, n, d);
    return paretond::oracle_pareto(paretond::dedup(raw));
}

}  // namespace test_support

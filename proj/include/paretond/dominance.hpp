#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>

#include "paretond/types.hpp"

namespace paretond {

/// Dominance between two points of equal dimensionality (minimization).
///
/// With an empty mask this is the strict relation: p != q and p[i] <= q[i] in
/// every dimension. With a non-empty mask the check is weak dominance over the
/// active dimensions only (equality allowed); inside a plateau subtree the
/// masked dimension is constant, which makes the weak form exact for
/// deduplicated data.
inline bool dominates(std::span<const double> p, std::span<const double> q, DimMask mask = {}) {
    if (p.size() != q.size()) throw std::invalid_argument("dominates: dimensionality mismatch");
    if (mask.empty()) {
        bool strict = false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] > q[i]) return false;
            if (p[i] < q[i]) strict = true;
        }
        return strict;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!mask.contains(i) && p[i] > q[i]) return false;
    }
    return true;
}

/// Lexicographic strict order by first differing coordinate.
inline bool lex_less(std::span<const double> a, std::span<const double> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace detail {

// Indices of s in lexicographic order; stable for coordinate-equal rows.
inline std::vector<std::uint32_t> lex_order(const PointSet& s) {
    std::vector<std::uint32_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return lex_less(s[a], s[b]);
    });
    return idx;
}

}  // namespace detail

/// Returns the same multiset in lexicographic order.
inline PointSet lex_sort(const PointSet& s) {
    PointSet out(s.dim());
    out.reserve(s.size());
    for (std::uint32_t i : detail::lex_order(s)) out.push_back(s[i]);
    out.set_pareto_verified(s.pareto_verified());
    return out;
}

/// Keeps exactly one copy of each distinct coordinate vector, preserving the
/// relative order of first occurrences.
inline PointSet dedup(const PointSet& s) {
    std::vector<std::uint32_t> order = detail::lex_order(s);
    std::vector<bool> drop(s.size(), false);
    // equal rows are adjacent after the stable sort, earliest input index first
    for (std::size_t k = 1; k < order.size(); ++k) {
        std::span<const double> prev = s[order[k - 1]];
        std::span<const double> cur = s[order[k]];
        if (std::equal(prev.begin(), prev.end(), cur.begin())) drop[order[k]] = true;
    }
    PointSet out(s.dim());
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!drop[i]) out.push_back(s[i]);
    }
    out.set_pareto_verified(s.pareto_verified());
    return out;
}

/// Brute-force Pareto frontier: keeps exactly the points of f not dominated by
/// any other point, in input order. All-pairs reference with early exit; this
/// is the ground-truth oracle the indexed filters are checked against.
/// Precondition: f is deduplicated.
inline PointSet oracle_pareto(const PointSet& f, FilterStats& stats) {
    const std::size_t n = f.size();
    PointSet out(f.dim());
    for (std::size_t i = 0; i < n; ++i) {
        std::span<const double> p = f[i];
        bool dominated = false;
        for (std::size_t j = 0; j < n && !dominated; ++j) {
            if (j == i) continue;
            ++stats.comparisons;
            dominated = dominates(f[j], p);
        }
        if (!dominated) out.push_back(p);
    }
    out.set_pareto_verified(true);
    return out;
}

inline PointSet oracle_pareto(const PointSet& f) {
    FilterStats scratch;
    return oracle_pareto(f, scratch);
}

}  // namespace paretond

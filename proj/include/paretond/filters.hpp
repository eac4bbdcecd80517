#pragma once

#include <algorithm>
#include <chrono>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "paretond/dominance.hpp"
#include "paretond/nd_tree.hpp"
#include "paretond/qnd_tree.hpp"
#include "paretond/tnd_tree.hpp"
#include "paretond/types.hpp"

namespace paretond {

enum class TreeKind { nd_plus, qnd_plus, tnd_plus };

struct FilterResult {
    PointSet frontier;
    FilterStats stats;
};

/// Concatenation of two point sets with duplicates collapsed; the input shape
/// for union filtering.
inline PointSet union_input(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("union_input: dimensionality mismatch");
    PointSet both(a.dim());
    both.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) both.push_back(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) both.push_back(b[i]);
    return dedup(both);
}

namespace detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::uint64_t ns() const {
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                              std::chrono::steady_clock::now() - start_)
                                              .count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <typename Tree>
FilterResult plain_nd_red_impl(const PointSet& f, LeafCapacity m) {
    Timer timer;
    FilterResult res;
    const DimMask lead = DimMask::of({0});
    PointSet sorted = lex_sort(f);
    Tree tree(f.dim(), m, lead);
    PointSet out(f.dim());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::span<const double> p = sorted[i];
        // lex order: p cannot dominate anything already stored, and a stored
        // point weakly dominating p on dims 2..d dominates it outright
        if (!tree.dominated(p, lead, res.stats)) {
            tree.insert(p);
            out.push_back(p);
        }
    }
    out.set_pareto_verified(true);
    res.frontier = std::move(out);
    res.stats.elapsed_ns = timer.ns();
    return res;
}

}  // namespace detail

/// Lex-sorts f and feeds it through a tree over the last d-1 dimensions;
/// a point is kept iff nothing stored weakly dominates its projection.
/// Requires deduplicated input.
inline FilterResult plain_nd_red(const PointSet& f, TreeKind kind, LeafCapacity m = {}) {
    if (f.dim() < 2) throw std::invalid_argument("plain_nd_red: need at least 2 dimensions");
    switch (kind) {
        case TreeKind::nd_plus: return detail::plain_nd_red_impl<NdPlusTree>(f, m);
        case TreeKind::qnd_plus: return detail::plain_nd_red_impl<QndPlusTree>(f, m);
        case TreeKind::tnd_plus: return detail::plain_nd_red_impl<TndPlusTree>(f, m);
    }
    throw std::invalid_argument("plain_nd_red: unknown tree kind");
}

/// Single lex-ordered pass splitting f into a guaranteed-Pareto subset P (every
/// point improving some running dimension minimum over dims 2..d) and the
/// remaining points Q, which stay lex-sorted. For d == 2, P is the entire
/// frontier.
inline std::pair<PointSet, PointSet> pareto_subset(const PointSet& f) {
    PointSet sorted = lex_sort(f);
    const std::size_t d = f.dim();
    std::vector<double> running_min(d, std::numeric_limits<double>::infinity());
    PointSet p(d);
    PointSet q(d);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::span<const double> pt = sorted[i];
        bool improves = false;
        for (std::size_t k = 1; k < d; ++k) {
            if (pt[k] < running_min[k]) {
                running_min[k] = pt[k];
                improves = true;
            }
        }
        if (improves) {
            p.push_back(pt);
        } else {
            q.push_back(pt);
        }
    }
    p.set_pareto_verified(true);
    return {std::move(p), std::move(q)};
}

namespace detail {

template <typename Tree>
FilterResult pre_nd_impl(const PointSet& f, LeafCapacity m) {
    Timer timer;
    FilterResult res;
    auto [p, q] = pareto_subset(f);
    Tree tree = Tree::build(p, m);
    PointSet out = std::move(p);
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::span<const double> pt = q[i];
        if (!tree.dominated(pt, {}, res.stats)) {
            tree.insert(pt);
            out.push_back(pt);
        }
    }
    out.set_pareto_verified(true);
    res.frontier = std::move(out);
    res.stats.elapsed_ns = timer.ns();
    return res;
}

// b minus the exact points of a, preserving b's order
inline PointSet subtract_points(const PointSet& b, const PointSet& a) {
    std::vector<std::uint32_t> order = lex_order(a);
    PointSet out(b.dim());
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::span<const double> pt = b[i];
        auto it = std::lower_bound(order.begin(), order.end(), pt,
                                   [&](std::uint32_t id, std::span<const double> key) {
                                       return lex_less(a[id], key);
                                   });
        bool present = it != order.end() && std::equal(pt.begin(), pt.end(), a[*it].begin());
        if (!present) out.push_back(pt);
    }
    out.set_pareto_verified(b.pareto_verified());
    return out;
}

template <typename Tree>
FilterResult sym_nd_impl(const PointSet& a, const PointSet& b, LeafCapacity m) {
    Timer timer;
    FilterResult res;
    PointSet b_distinct = subtract_points(b, a);
    Tree tree_a = Tree::build(a, m);
    PointSet b_left(b.dim());
    for (std::size_t i = 0; i < b_distinct.size(); ++i) {
        if (!tree_a.dominated(b_distinct[i], {}, res.stats)) b_left.push_back(b_distinct[i]);
    }
    b_left.set_pareto_verified(true);
    Tree tree_b = Tree::build(b_left, m);
    PointSet out(a.dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!tree_b.dominated(a[i], {}, res.stats)) out.push_back(a[i]);
    }
    for (std::size_t i = 0; i < b_left.size(); ++i) out.push_back(b_left[i]);
    out.set_pareto_verified(true);
    res.frontier = std::move(out);
    res.stats.elapsed_ns = timer.ns();
    return res;
}

}  // namespace detail

/// Computes an initial Pareto subset, batch-builds a tree from it, then runs
/// the remaining points through dominance checks in lex order. Requires
/// deduplicated input.
inline FilterResult pre_nd(const PointSet& f, TreeKind kind, LeafCapacity m = {}) {
    switch (kind) {
        case TreeKind::nd_plus: return detail::pre_nd_impl<NdPlusTree>(f, m);
        case TreeKind::qnd_plus: return detail::pre_nd_impl<QndPlusTree>(f, m);
        case TreeKind::tnd_plus: return detail::pre_nd_impl<TndPlusTree>(f, m);
    }
    throw std::invalid_argument("pre_nd: unknown tree kind");
}

/// Symmetric union filter over two verified Pareto sets: drops the points of B
/// dominated by A, then the points of A dominated by the surviving B. Only
/// meaningful for unions; overlapping points are collapsed first.
inline FilterResult sym_nd(const PointSet& a, const PointSet& b, TreeKind kind,
                           LeafCapacity m = {}) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sym_nd: dimensionality mismatch");
    if (!a.pareto_verified() || !b.pareto_verified()) {
        throw std::invalid_argument("sym_nd: inputs must be verified Pareto sets");
    }
    switch (kind) {
        case TreeKind::nd_plus: return detail::sym_nd_impl<NdPlusTree>(a, b, m);
        case TreeKind::qnd_plus: return detail::sym_nd_impl<QndPlusTree>(a, b, m);
        case TreeKind::tnd_plus: return detail::sym_nd_impl<TndPlusTree>(a, b, m);
    }
    throw std::invalid_argument("sym_nd: unknown tree kind");
}

}  // namespace paretond

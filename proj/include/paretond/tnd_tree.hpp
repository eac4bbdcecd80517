#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "paretond/detail/tree_base.hpp"
#include "paretond/dominance.hpp"
#include "paretond/selection.hpp"
#include "paretond/types.hpp"

namespace paretond {

/// Ternary index tree. When the quartiles of the split dimension show a
/// plateau (Q1 == Q2 or Q2 == Q3) the node tri-partitions around the median:
/// strictly smaller values left, the plateau into a middle child with the
/// dimension excluded below it, strictly larger values right. Without a
/// plateau the node is a plain median split with no middle child.
class TndPlusTree {
public:
    explicit TndPlusTree(std::size_t dim, LeafCapacity m = {}, DimMask reduced = {})
        : st_(dim, m, reduced) {}

    static TndPlusTree build(const PointSet& pts, LeafCapacity m = {}, DimMask reduced = {}) {
        TndPlusTree t(pts.dim(), m, reduced);
        t.build_from(pts);
        return t;
    }

    std::size_t dim() const { return st_.dim(); }
    std::size_t size() const { return st_.point_count(); }
    NodeRef root() const { return st_.ref(st_.root()); }
    TreeShapeStats shape() const { return st_.shape(); }

    void insert(std::span<const double> p) {
        const std::uint32_t pid = st_.add_point(p);
        if (st_.root() < 0) {
            st_.set_root(make_leaf_single(pid, st_.first_active(st_.reduced()), st_.reduced()));
            return;
        }
        std::int32_t v = st_.root();
        for (;;) {
            st_.widen(v, p);
            detail::TreeNode& n = st_.node(v);
            if (n.leaf) {
                n.points.push_back(pid);
                if (n.points.size() > st_.capacity()) split_leaf(v);
                return;
            }
            // left on <, middle on == when present, right otherwise
            int slot;
            if (p[n.dim] < n.split) {
                slot = 0;
            } else if (p[n.dim] == n.split && n.middle >= 0) {
                slot = 1;
            } else {
                slot = 2;
            }
            std::int32_t next = slot == 0 ? n.left : slot == 1 ? n.middle : n.right;
            if (next < 0) {
                next = make_leaf_single(pid, st_.next_active(n.dim, n.excluded), n.excluded);
                detail::TreeNode& again = st_.node(v);
                (slot == 0 ? again.left : again.right) = next;
                return;
            }
            v = next;
        }
    }

    bool dominated(std::span<const double> p, DimMask mask, FilterStats& stats) const {
        if (p.size() != st_.dim()) throw std::invalid_argument("tree: dimensionality mismatch");
        return dominated_rec(st_.root(), p, mask, stats);
    }

private:
    void build_from(const PointSet& pts) {
        if (!pts.pareto_verified()) {
            throw std::invalid_argument("tree build: input must be a verified Pareto set");
        }
        if (pts.empty()) return;
        std::vector<std::uint32_t> ids(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) ids[i] = st_.add_point(pts[i]);
        std::int32_t r = build_rec(ids, st_.first_active(st_.reduced()), st_.reduced());
        st_.set_root(r);
        st_.compute_bounds(r);
    }

    std::int32_t make_leaf(std::span<const std::uint32_t> ids, std::uint16_t dim, DimMask mask) {
        std::int32_t v = st_.new_node(dim, mask);
        st_.node(v).points.assign(ids.begin(), ids.end());
        return v;
    }

    std::int32_t make_leaf_single(std::uint32_t pid, std::uint16_t dim, DimMask mask) {
        std::int32_t v = st_.new_node(dim, mask);
        st_.node(v).points.push_back(pid);
        st_.widen(v, st_.point(pid));
        return v;
    }

    std::int32_t build_rec(std::span<std::uint32_t> ids, std::uint16_t dim, DimMask mask) {
        if (ids.size() <= st_.capacity()) return make_leaf(ids, dim, mask);
        scratch_.clear();
        for (std::uint32_t id : ids) scratch_.push_back(st_.point(id)[dim]);
        const std::size_t n = scratch_.size();
        const Quartiles qs = detail::quartiles_inplace(scratch_);
        const double q = qs.q2;
        // a quartile equality marks a plateau only between distinct ranks;
        // for n == 2 the Q2 and Q3 ranks coincide and say nothing
        const bool upper_plateau = qs.q2 == qs.q3 && n / 2 != 3 * n / 4;

        std::int32_t v = st_.new_node(dim, mask);
        st_.node(v).leaf = false;
        st_.node(v).split = q;
        std::int32_t l = -1;
        std::int32_t md = -1;
        std::int32_t r = -1;
        if (qs.q1 == qs.q2 || upper_plateau) {
            st_.node(v).plateau = true;
            auto mid1 = std::partition(ids.begin(), ids.end(),
                                       [&](std::uint32_t id) { return st_.point(id)[dim] < q; });
            auto mid2 = std::partition(mid1, ids.end(),
                                       [&](std::uint32_t id) { return st_.point(id)[dim] == q; });
            std::size_t nl = static_cast<std::size_t>(mid1 - ids.begin());
            std::size_t nm = static_cast<std::size_t>(mid2 - mid1);
            DimMask mmask = mask.with(dim);
            std::uint16_t cdim = st_.next_active(dim, mask);
            if (nl > 0) l = build_rec(ids.first(nl), cdim, mask);
            md = build_rec(ids.subspan(nl, nm), st_.next_active(dim, mmask), mmask);
            if (nl + nm < ids.size()) r = build_rec(ids.subspan(nl + nm), cdim, mask);
        } else {
            auto mid = std::partition(ids.begin(), ids.end(),
                                      [&](std::uint32_t id) { return st_.point(id)[dim] < q; });
            std::size_t nl = static_cast<std::size_t>(mid - ids.begin());
            std::uint16_t cdim = st_.next_active(dim, mask);
            l = build_rec(ids.first(nl), cdim, mask);
            r = build_rec(ids.subspan(nl), cdim, mask);
        }
        st_.node(v).left = l;
        st_.node(v).middle = md;
        st_.node(v).right = r;
        return v;
    }

    void split_leaf(std::int32_t v) {
        std::vector<std::uint32_t> ids = std::move(st_.node(v).points);
        st_.node(v).points.clear();
        std::int32_t rebuilt = build_rec(ids, st_.node(v).dim, st_.node(v).excluded);
        detail::TreeNode moved = std::move(st_.node(rebuilt));
        st_.node(v) = std::move(moved);
        st_.compute_bounds(v);
    }

    bool dominated_rec(std::int32_t v, std::span<const double> p, DimMask mask,
                       FilterStats& stats) const {
        if (v < 0) return false;
        ++stats.node_visits;
        if (st_.lb_prunes(v, p, mask)) return false;
        const detail::TreeNode& n = st_.node(v);
        if (n.leaf) {
            ++stats.leaf_scans;
            for (std::uint32_t id : n.points) {
                ++stats.comparisons;
                // full-dimension strict check, see NdPlusTree::dominated_rec
                if (dominates(st_.point(id), p)) return true;
            }
            return false;
        }
        if (p[n.dim] < n.split) return dominated_rec(n.left, p, mask, stats);
        if (dominated_rec(n.left, p, mask, stats)) return true;
        if (n.middle >= 0) {
            return dominated_rec(n.middle, p, mask.with(n.dim), stats) ||
                   dominated_rec(n.right, p, mask, stats);
        }
        return dominated_rec(n.right, p, mask, stats);
    }

    detail::TreeStorage st_;
    std::vector<double> scratch_;
};

}  // namespace paretond

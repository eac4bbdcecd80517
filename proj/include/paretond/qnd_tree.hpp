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

/// Quartile variant of the binary index tree. A node whose first and second
/// quartiles coincide in the split dimension holds a plateau: the points equal
/// to the median all go right, everything else left, and the dimension is
/// dropped from splitting and dominance checks inside the right subtree.
/// Otherwise the node splits at the median like NdPlusTree.
class QndPlusTree {
public:
    explicit QndPlusTree(std::size_t dim, LeafCapacity m = {}, DimMask reduced = {})
        : st_(dim, m, reduced) {}

    static QndPlusTree build(const PointSet& pts, LeafCapacity m = {}, DimMask reduced = {}) {
        QndPlusTree t(pts.dim(), m, reduced);
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
            const bool go_right = n.plateau ? p[n.dim] == n.split : p[n.dim] >= n.split;
            std::int32_t next = go_right ? n.right : n.left;
            if (next < 0) {
                DimMask cmask = go_right && n.plateau ? n.excluded.with(n.dim) : n.excluded;
                next = make_leaf_single(pid, st_.next_active(n.dim, cmask), cmask);
                detail::TreeNode& again = st_.node(v);
                (go_right ? again.right : again.left) = next;
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
        std::nth_element(scratch_.begin(), scratch_.begin() + n / 2, scratch_.end());
        const double q2 = scratch_[n / 2];
        std::nth_element(scratch_.begin(), scratch_.begin() + n / 4, scratch_.begin() + n / 2);
        const double q1 = scratch_[n / 4];

        std::int32_t v = st_.new_node(dim, mask);
        st_.node(v).leaf = false;
        st_.node(v).split = q2;
        std::int32_t l = -1;
        std::int32_t r = -1;
        if (q1 == q2) {
            // quartile partitioning: the plateau (== q2) goes right and the
            // split dimension is excluded there
            st_.node(v).plateau = true;
            auto mid = std::partition(ids.begin(), ids.end(),
                                      [&](std::uint32_t id) { return st_.point(id)[dim] != q2; });
            std::size_t nl = static_cast<std::size_t>(mid - ids.begin());
            DimMask rmask = mask.with(dim);
            if (nl > 0) l = build_rec(ids.first(nl), st_.next_active(dim, mask), mask);
            r = build_rec(ids.subspan(nl), st_.next_active(dim, rmask), rmask);
        } else {
            auto mid = std::partition(ids.begin(), ids.end(),
                                      [&](std::uint32_t id) { return st_.point(id)[dim] < q2; });
            std::size_t nl = static_cast<std::size_t>(mid - ids.begin());
            std::uint16_t cdim = st_.next_active(dim, mask);
            l = build_rec(ids.first(nl), cdim, mask);
            r = build_rec(ids.subspan(nl), cdim, mask);
        }
        st_.node(v).left = l;
        st_.node(v).right = r;
        return v;
    }

    void split_leaf(std::int32_t v) {
        std::vector<std::uint32_t> ids = std::move(st_.node(v).points);
        st_.node(v).points.clear();
        const DimMask mask = st_.node(v).excluded;
        const std::uint16_t dim = st_.node(v).dim;
        std::int32_t rebuilt = build_rec(ids, dim, mask);
        // graft the rebuilt node's content onto v so the parent link stays valid
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
        if (n.plateau) {
            return dominated_rec(n.left, p, mask, stats) ||
                   dominated_rec(n.right, p, mask.with(n.dim), stats);
        }
        return dominated_rec(n.left, p, mask, stats) || dominated_rec(n.right, p, mask, stats);
    }

    detail::TreeStorage st_;
    std::vector<double> scratch_;
};

}  // namespace paretond

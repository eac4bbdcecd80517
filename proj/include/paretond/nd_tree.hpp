#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "paretond/detail/tree_base.hpp"
#include "paretond/dominance.hpp"
#include "paretond/types.hpp"

namespace paretond {

/// Binary leaf-oriented index tree over a Pareto set. Internal nodes split at
/// the upper median of one dimension (round-robin over the active dimensions):
/// values below the split go left, the rest right. Every node keeps the
/// component-wise minimum of the points stored beneath it, used to prune
/// dominance queries. A `reduced` mask drops dimensions from splitting and
/// from dominance checks for the whole tree.
class NdPlusTree {
public:
    explicit NdPlusTree(std::size_t dim, LeafCapacity m = {}, DimMask reduced = {})
        : st_(dim, m, reduced) {}

    static NdPlusTree build(const PointSet& pts, LeafCapacity m = {}, DimMask reduced = {}) {
        NdPlusTree t(pts.dim(), m, reduced);
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
            std::int32_t next = p[n.dim] < n.split ? n.left : n.right;
            if (next < 0) {
                next = make_leaf_single(pid, st_.next_active(n.dim, n.excluded), n.excluded);
                detail::TreeNode& again = st_.node(v);  // new_node may reallocate
                (p[again.dim] < again.split ? again.left : again.right) = next;
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

    // Upper median in `dim` over ids; reports whether splitting there makes
    // progress (some value lies below the median).
    double median_of(std::span<const std::uint32_t> ids, std::uint16_t dim, bool& progress) {
        scratch_.clear();
        double lo = st_.point(ids[0])[dim];
        for (std::uint32_t id : ids) {
            double v = st_.point(id)[dim];
            scratch_.push_back(v);
            if (v < lo) lo = v;
        }
        auto mid = scratch_.begin() + scratch_.size() / 2;
        std::nth_element(scratch_.begin(), mid, scratch_.end());
        progress = lo < *mid;
        return *mid;
    }

    std::int32_t build_rec(std::span<std::uint32_t> ids, std::uint16_t dim, DimMask mask) {
        if (ids.size() <= st_.capacity()) return make_leaf(ids, dim, mask);
        const std::size_t active = st_.dim() - mask.count();
        double q = 0.0;
        bool progress = false;
        for (std::size_t attempt = 0; attempt < active && !progress; ++attempt) {
            q = median_of(ids, dim, progress);
            if (!progress) dim = st_.next_active(dim, mask);
        }
        if (!progress) {
            // every active dimension has median == minimum; only tiny
            // permutation-like Pareto sets reach this, seal them as a leaf
            return make_leaf(ids, dim, mask);
        }
        auto mid = std::partition(ids.begin(), ids.end(),
                                  [&](std::uint32_t id) { return st_.point(id)[dim] < q; });
        std::int32_t v = st_.new_node(dim, mask);
        st_.node(v).leaf = false;
        st_.node(v).split = q;
        std::uint16_t cdim = st_.next_active(dim, mask);
        std::size_t nl = static_cast<std::size_t>(mid - ids.begin());
        std::int32_t l = build_rec(ids.first(nl), cdim, mask);
        std::int32_t r = build_rec(ids.subspan(nl), cdim, mask);
        st_.node(v).left = l;
        st_.node(v).right = r;
        return v;
    }

    void split_leaf(std::int32_t v) {
        std::vector<std::uint32_t> ids = std::move(st_.node(v).points);
        st_.node(v).points.clear();
        std::int32_t rebuilt = build_rec(ids, st_.node(v).dim, st_.node(v).excluded);
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
                // full-dimension strict check: masked dimensions are already
                // known <= the query here (plateau routing / lex order), so
                // this equals the reduced-dimension check but keeps the
                // equality exclusion exact
                if (dominates(st_.point(id), p)) return true;
            }
            return false;
        }
        if (p[n.dim] < n.split) return dominated_rec(n.left, p, mask, stats);
        return dominated_rec(n.left, p, mask, stats) || dominated_rec(n.right, p, mask, stats);
    }

    detail::TreeStorage st_;
    std::vector<double> scratch_;
};

}  // namespace paretond

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "paretond/types.hpp"

namespace paretond {

namespace detail {

struct TreeNode {
    double split = 0.0;
    std::vector<std::uint32_t> points;  // leaf payload: ids into the point arena
    std::int32_t left = -1;
    std::int32_t middle = -1;
    std::int32_t right = -1;
    std::uint16_t dim = 0;
    bool leaf = true;
    bool plateau = false;
    DimMask excluded;  // mask inherited along the path from the root
};

class TreeStorage;

}  // namespace detail

/// Read-only cursor into a tree node, for shape traversal and tests.
class NodeRef {
public:
    NodeRef() = default;

    bool valid() const { return idx_ >= 0; }
    bool is_leaf() const;
    std::size_t dim() const;
    double split_value() const;
    bool plateau() const;
    DimMask excluded() const;
    std::span<const double> lower_bound() const;
    std::size_t leaf_size() const;
    std::span<const double> leaf_point(std::size_t i) const;
    NodeRef left() const;
    NodeRef middle() const;
    NodeRef right() const;

private:
    friend class detail::TreeStorage;
    NodeRef(const detail::TreeStorage* t, std::int32_t idx) : t_(t), idx_(idx) {}

    const detail::TreeStorage* t_ = nullptr;
    std::int32_t idx_ = -1;
};

namespace detail {

/// Point arena, node arena and lower-bound vectors shared by the tree variants.
class TreeStorage {
public:
    TreeStorage(std::size_t dim, LeafCapacity m, DimMask reduced)
        : dim_(dim), m_(m.value), reduced_(reduced) {
        if (dim < 2 || dim > 64) throw std::invalid_argument("tree: dimensionality must be in [2, 64]");
        if (m_ < 1) throw std::invalid_argument("tree: leaf capacity must be at least 1");
        if (reduced.count() >= dim) throw std::invalid_argument("tree: no active dimension left");
    }

    std::size_t dim() const { return dim_; }
    std::size_t capacity() const { return m_; }
    DimMask reduced() const { return reduced_; }
    std::int32_t root() const { return root_; }
    void set_root(std::int32_t r) { root_ = r; }

    std::size_t point_count() const { return coords_.size() / dim_; }

    std::span<const double> point(std::uint32_t id) const {
        return {coords_.data() + std::size_t{id} * dim_, dim_};
    }

    std::uint32_t add_point(std::span<const double> p) {
        if (p.size() != dim_) throw std::invalid_argument("tree: dimensionality mismatch");
        for (double v : p) {
            if (!std::isfinite(v)) throw std::invalid_argument("tree: non-finite coordinate");
        }
        coords_.insert(coords_.end(), p.begin(), p.end());
        return static_cast<std::uint32_t>(point_count() - 1);
    }

    TreeNode& node(std::int32_t v) { return nodes_[v]; }
    const TreeNode& node(std::int32_t v) const { return nodes_[v]; }
    std::size_t node_count() const { return nodes_.size(); }

    std::int32_t new_node(std::uint16_t dim, DimMask excluded) {
        TreeNode n;
        n.dim = dim;
        n.excluded = excluded;
        nodes_.push_back(std::move(n));
        lb_.insert(lb_.end(), dim_, std::numeric_limits<double>::infinity());
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    std::span<double> lb(std::int32_t v) { return {lb_.data() + std::size_t(v) * dim_, dim_}; }
    std::span<const double> lb(std::int32_t v) const {
        return {lb_.data() + std::size_t(v) * dim_, dim_};
    }

    void widen(std::int32_t v, std::span<const double> p) {
        std::span<double> b = lb(v);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (p[j] < b[j]) b[j] = p[j];
        }
    }

    /// True when p[j] < lb[j] in some active dimension, i.e. nothing stored
    /// under v can dominate p.
    bool lb_prunes(std::int32_t v, std::span<const double> p, DimMask mask) const {
        std::span<const double> b = lb(v);
        if (mask.empty()) {
            for (std::size_t j = 0; j < dim_; ++j) {
                if (p[j] < b[j]) return true;
            }
            return false;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!mask.contains(j) && p[j] < b[j]) return true;
        }
        return false;
    }

    /// Exact lower bounds for the subtree at v, post-order.
    void compute_bounds(std::int32_t v) {
        TreeNode& n = nodes_[v];
        std::span<double> b = lb(v);
        std::fill(b.begin(), b.end(), std::numeric_limits<double>::infinity());
        if (n.leaf) {
            for (std::uint32_t id : n.points) widen(v, point(id));
            return;
        }
        for (std::int32_t c : {n.left, n.middle, n.right}) {
            if (c < 0) continue;
            compute_bounds(c);
            std::span<const double> cb = lb(c);
            for (std::size_t j = 0; j < dim_; ++j) {
                if (cb[j] < b[j]) b[j] = cb[j];
            }
        }
    }

    /// Next active dimension after `dim` in cyclic order, skipping `mask`.
    std::uint16_t next_active(std::uint16_t dim, DimMask mask) const {
        for (std::size_t step = 1; step <= dim_; ++step) {
            std::uint16_t d = static_cast<std::uint16_t>((dim + step) % dim_);
            if (!mask.contains(d)) return d;
        }
        throw std::logic_error("tree: no active dimension left");
    }

    std::uint16_t first_active(DimMask mask) const {
        for (std::size_t d = 0; d < dim_; ++d) {
            if (!mask.contains(d)) return static_cast<std::uint16_t>(d);
        }
        throw std::logic_error("tree: no active dimension left");
    }

    TreeShapeStats shape() const {
        TreeShapeStats s;
        if (root_ < 0) return s;
        s.min_depth = std::numeric_limits<std::size_t>::max();
        std::vector<std::pair<std::int32_t, std::size_t>> stack{{root_, 0}};
        while (!stack.empty()) {
            auto [v, depth] = stack.back();
            stack.pop_back();
            ++s.node_count;
            const TreeNode& n = nodes_[v];
            if (n.leaf) {
                ++s.leaf_count;
                s.point_count += n.points.size();
                s.max_depth = std::max(s.max_depth, depth);
                s.min_depth = std::min(s.min_depth, depth);
                continue;
            }
            for (std::int32_t c : {n.left, n.middle, n.right}) {
                if (c >= 0) stack.emplace_back(c, depth + 1);
            }
        }
        s.balance = s.max_depth - s.min_depth;
        return s;
    }

    NodeRef ref(std::int32_t v) const { return NodeRef(this, v); }

private:
    std::size_t dim_;
    std::size_t m_;
    DimMask reduced_;
    std::int32_t root_ = -1;
    std::vector<double> coords_;
    std::vector<TreeNode> nodes_;
    std::vector<double> lb_;
};

}  // namespace detail

inline bool NodeRef::is_leaf() const { return t_->node(idx_).leaf; }
inline std::size_t NodeRef::dim() const { return t_->node(idx_).dim; }
inline double NodeRef::split_value() const { return t_->node(idx_).split; }
inline bool NodeRef::plateau() const { return t_->node(idx_).plateau; }
inline DimMask NodeRef::excluded() const { return t_->node(idx_).excluded; }
inline std::span<const double> NodeRef::lower_bound() const { return t_->lb(idx_); }
inline std::size_t NodeRef::leaf_size() const { return t_->node(idx_).points.size(); }
inline std::span<const double> NodeRef::leaf_point(std::size_t i) const {
    return t_->point(t_->node(idx_).points[i]);
}
inline NodeRef NodeRef::left() const { return t_->ref(t_->node(idx_).left); }
inline NodeRef NodeRef::middle() const { return t_->ref(t_->node(idx_).middle); }
inline NodeRef NodeRef::right() const { return t_->ref(t_->node(idx_).right); }

}  // namespace paretond

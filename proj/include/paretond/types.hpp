#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace paretond {

/// Set of dimension indices (0-based) excluded from dominance checks and
/// from splitting. At least one dimension must always stay active.
class DimMask {
public:
    DimMask() = default;

    static DimMask of(std::initializer_list<std::size_t> dims) {
        DimMask m;
        for (std::size_t d : dims) m = m.with(d);
        return m;
    }

    bool empty() const { return bits_ == 0; }
    bool contains(std::size_t dim) const { return (bits_ >> dim) & 1u; }

    DimMask with(std::size_t dim) const {
        if (dim >= 64) throw std::invalid_argument("DimMask: dimension index out of range");
        DimMask m = *this;
        m.bits_ |= std::uint64_t{1} << dim;
        return m;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) ++c;
        return c;
    }

    std::uint64_t bits() const { return bits_; }

    friend bool operator==(const DimMask&, const DimMask&) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Counter tally for one filtering or query run. `comparisons` counts pairwise
/// point dominance evaluations, `node_visits` tree-node entries, `leaf_scans`
/// leaf point lists traversed.
struct FilterStats {
    std::uint64_t comparisons = 0;
    std::uint64_t node_visits = 0;
    std::uint64_t leaf_scans = 0;
    std::uint64_t elapsed_ns = 0;
};

/// Shape summary of a built index tree. Depths are edge counts from the root;
/// `balance` is the balance indicator BI = max_depth - min_depth.
struct TreeShapeStats {
    std::size_t max_depth = 0;
    std::size_t min_depth = 0;
    std::size_t balance = 0;
    std::size_t node_count = 0;
    std::size_t leaf_count = 0;
    std::size_t point_count = 0;
};

/// Maximum number of points stored in one leaf.
struct LeafCapacity {
    std::size_t value = 8;
};

/// Ordered collection of d-dimensional points (64-bit reals, minimization
/// objectives) stored row-major. `pareto_verified` marks sets known to contain
/// no dominated member.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::size_t dim) : dim_(dim) {
        if (dim < 2) throw std::invalid_argument("PointSet: dimensionality must be at least 2");
        if (dim > 64) throw std::invalid_argument("PointSet: dimensionality above 64 not supported");
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const { return coords_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }

    void push_back(std::span<const double> p) {
        if (p.size() != dim_) throw std::invalid_argument("PointSet: dimensionality mismatch");
        for (double v : p) {
            if (!std::isfinite(v)) throw std::invalid_argument("PointSet: non-finite coordinate");
        }
        coords_.insert(coords_.end(), p.begin(), p.end());
        pareto_verified_ = false;
    }

    bool pareto_verified() const { return pareto_verified_; }
    void set_pareto_verified(bool v) { pareto_verified_ = v; }

    const std::vector<double>& raw() const { return coords_; }

    void reserve(std::size_t n) { coords_.reserve(n * dim_); }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
    bool pareto_verified_ = false;
};

/// Convenience literal constructor; dimensionality is taken from the first row.
inline PointSet make_points(std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() == 0) throw std::invalid_argument("make_points: need at least one row");
    PointSet s(rows.begin()->size());
    for (const auto& row : rows) {
        std::vector<double> tmp(row);
        s.push_back(tmp);
    }
    return s;
}

}  // namespace paretond

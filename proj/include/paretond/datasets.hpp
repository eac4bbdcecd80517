#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "paretond/dominance.hpp"
#include "paretond/rng.hpp"
#include "paretond/selection.hpp"
#include "paretond/types.hpp"

namespace paretond {

enum class Family { urs, ursp, ursc, urspc };

/// Parameters for the synthetic Pareto-set generators. plateau_fraction and
/// plateau_dims control the plateau transform; plateau_dims == 0 means the
/// family default (ceil(d/2) for URSP, ceil(d/3) for URSPC).
struct DatasetSpec {
    Family family = Family::urs;
    std::size_t d = 3;
    std::size_t n = 100;
    std::uint64_t seed = 0;
    std::size_t oversample = 4;
    double plateau_fraction = 0.2;
    std::size_t plateau_dims = 0;
};

namespace detail {

inline void validate(const DatasetSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("dataset: d must be at least 2");
    if (spec.n < 1) throw std::invalid_argument("dataset: n must be at least 1");
    if (spec.oversample < 1) throw std::invalid_argument("dataset: oversample must be at least 1");
    if ((spec.family == Family::ursc || spec.family == Family::urspc) && spec.d < 3) {
        throw std::invalid_argument("dataset: URSC/URSPC need at least 3 dimensions");
    }
    if (spec.plateau_fraction <= 0.0 || spec.plateau_fraction > 1.0) {
        throw std::invalid_argument("dataset: plateau fraction must be in (0, 1]");
    }
}

// count points uniform in (0,1]^d, each normalized onto the unit sphere;
// distinct positive points of norm 1 are mutually non-dominated
inline PointSet sample_unit_sphere(Rng& rng, std::size_t d, std::size_t count) {
    PointSet out(d);
    out.reserve(count);
    std::vector<double> p(d);
    for (std::size_t i = 0; i < count; ++i) {
        double sq = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            p[k] = rng.uniform_pos();
            sq += p[k] * p[k];
        }
        const double norm = std::sqrt(sq);
        for (std::size_t k = 0; k < d; ++k) p[k] /= norm;
        out.push_back(p);
    }
    return out;
}

// k distinct indices from [0, n), by partial Fisher-Yates
inline std::vector<std::size_t> pick_distinct(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

// overwrite `dims` randomly chosen dimensions with their current median in a
// random `fraction` of the points
inline PointSet inject_plateaus(Rng& rng, const PointSet& raw, std::size_t dims, double fraction) {
    const std::size_t n = raw.size();
    const std::size_t d = raw.dim();
    std::vector<double> coords(raw.raw());
    std::vector<std::size_t> chosen = pick_distinct(rng, d, dims);
    std::vector<double> column(n);
    const std::size_t hits = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                          std::llround(fraction * double(n))));
    for (std::size_t dim : chosen) {
        for (std::size_t i = 0; i < n; ++i) column[i] = coords[i * d + dim];
        const double pivot = select_kth(column, n / 2);
        for (std::size_t i : pick_distinct(rng, n, hits)) coords[i * d + dim] = pivot;
    }
    PointSet out(d);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::span<const double>(coords.data() + i * d, d));
    }
    return out;
}

// make dimension b directly and dimension c inversely proportional to a
// randomly chosen base dimension, with 5% relative noise
inline PointSet inject_correlation(Rng& rng, const PointSet& raw) {
    const std::size_t n = raw.size();
    const std::size_t d = raw.dim();
    std::vector<std::size_t> chosen = pick_distinct(rng, d, 3);
    const std::size_t base = chosen[0];
    const std::size_t direct = chosen[1];
    const std::size_t inverse = chosen[2];
    std::vector<double> coords(raw.raw());
    constexpr double tiny = 1e-9;
    for (std::size_t i = 0; i < n; ++i) {
        double* row = coords.data() + i * d;
        const double x = row[base];
        row[direct] = std::max(tiny, x * (1.0 + rng.uniform(-0.05, 0.05)));
        row[inverse] = std::max(tiny, (1.05 - x) * (1.0 + rng.uniform(-0.05, 0.05)));
    }
    PointSet out(d);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::span<const double>(coords.data() + i * d, d));
    }
    return out;
}

inline PointSet take_first(const PointSet& s, std::size_t n) {
    PointSet out(s.dim());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(s[i]);
    out.set_pareto_verified(s.pareto_verified());
    return out;
}

template <typename Transform>
PointSet generate_filtered(const DatasetSpec& spec, Transform&& transform) {
    Rng rng(spec.seed);
    std::size_t factor = spec.oversample;
    for (int round = 0; round < 64; ++round) {
        PointSet raw = sample_unit_sphere(rng, spec.d, factor * spec.n);
        PointSet shaped = transform(rng, raw);
        PointSet frontier = oracle_pareto(dedup(shaped));
        if (frontier.size() >= spec.n) return take_first(frontier, spec.n);
        factor *= 2;
    }
    throw std::runtime_error(
        "dataset generation failed: frontier stayed below the target size after 64 rounds "
        "(family " + std::to_string(static_cast<int>(spec.family)) + ", d=" +
        std::to_string(spec.d) + ", n=" + std::to_string(spec.n) + ")");
}

}  // namespace detail

/// Uniform-random Pareto set: points uniform in (0,1]^d projected onto the
/// unit sphere. Deterministic in the seed.
inline PointSet gen_urs(const DatasetSpec& spec) {
    detail::validate(spec);
    Rng rng(spec.seed);
    PointSet out(spec.d);
    out.reserve(spec.n);
    while (out.size() < spec.n) {
        PointSet batch = detail::sample_unit_sphere(rng, spec.d, spec.n - out.size());
        PointSet merged(spec.d);
        merged.reserve(out.size() + batch.size());
        for (std::size_t i = 0; i < out.size(); ++i) merged.push_back(out[i]);
        for (std::size_t i = 0; i < batch.size(); ++i) merged.push_back(batch[i]);
        out = dedup(merged);  // coordinate collisions are astronomically rare
    }
    out.set_pareto_verified(true);
    return out;
}

/// URS with plateaus: a fraction of the points gets the median value in each
/// of several randomly chosen dimensions, then the set is re-filtered.
inline PointSet gen_ursp(const DatasetSpec& spec) {
    detail::validate(spec);
    const std::size_t dims =
        spec.plateau_dims > 0 ? spec.plateau_dims : (spec.d + 1) / 2;
    if (dims > spec.d) throw std::invalid_argument("dataset: more plateau dimensions than d");
    return detail::generate_filtered(spec, [&](Rng& rng, const PointSet& raw) {
        return detail::inject_plateaus(rng, raw, dims, spec.plateau_fraction);
    });
}

/// URS with correlations: one dimension made directly and one inversely
/// proportional to a third, with small noise, then re-filtered.
inline PointSet gen_ursc(const DatasetSpec& spec) {
    detail::validate(spec);
    return detail::generate_filtered(spec, [&](Rng& rng, const PointSet& raw) {
        return detail::inject_correlation(rng, raw);
    });
}

/// Correlation transform followed by the plateau transform on ceil(d/3)
/// dimensions; the two may touch the same dimension.
inline PointSet gen_urspc(const DatasetSpec& spec) {
    detail::validate(spec);
    const std::size_t dims =
        spec.plateau_dims > 0 ? spec.plateau_dims : (spec.d + 2) / 3;
    if (dims > spec.d) throw std::invalid_argument("dataset: more plateau dimensions than d");
    return detail::generate_filtered(spec, [&](Rng& rng, const PointSet& raw) {
        PointSet correlated = detail::inject_correlation(rng, raw);
        return detail::inject_plateaus(rng, correlated, dims, spec.plateau_fraction);
    });
}

/// Dispatch on spec.family.
inline PointSet generate(const DatasetSpec& spec) {
    switch (spec.family) {
        case Family::urs: return gen_urs(spec);
        case Family::ursp: return gen_ursp(spec);
        case Family::ursc: return gen_ursc(spec);
        case Family::urspc: return gen_urspc(spec);
    }
    throw std::invalid_argument("dataset: unknown family");
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::urs: return "urs";
        case Family::ursp: return "ursp";
        case Family::ursc: return "ursc";
        case Family::urspc: return "urspc";
    }
    return "?";
}

}  // namespace paretond

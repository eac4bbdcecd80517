#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "paretond/dominance.hpp"
#include "paretond/filters.hpp"
#include "paretond/minkowski.hpp"

#include "golden.hpp"
#include "support.hpp"

using namespace paretond;
using test_support::comparison_set;
using test_support::random_grid_set;
using test_support::random_pareto;
using test_support::random_set;
using test_support::set_equals;
using test_support::sorted_rows;

namespace {

constexpr std::array<TreeKind, 3> kAllKinds{TreeKind::nd_plus, TreeKind::qnd_plus,
                                            TreeKind::tnd_plus};

PointSet footnote_sum() {
    return minkowski_sum(test_support::sum_input_a(), test_support::sum_input_b());
}

}  // namespace

TEST_CASE("plain_nd_red filters the footnote sum with every tree") {
    PointSet f = footnote_sum();
    PointSet expect = make_points({{5, 6, 7}, {7, 3, 4}, {11, 5, 3}});
    for (TreeKind kind : kAllKinds) {
        FilterResult res = plain_nd_red(f, kind);
        CHECK(set_equals(res.frontier, expect));
        CHECK(res.frontier.pareto_verified());
    }
}

TEST_CASE("plain_nd_red keeps a Pareto set and drops dominated points") {
    PointSet s = comparison_set();
    CHECK(set_equals(plain_nd_red(s, TreeKind::nd_plus).frontier, s));

    PointSet f = make_points({{1, 5}, {2, 4}, {2, 6}, {3, 3}});
    PointSet expect = make_points({{1, 5}, {2, 4}, {3, 3}});
    for (TreeKind kind : kAllKinds) {
        CHECK(set_equals(plain_nd_red(f, kind).frontier, expect));
    }
}

TEST_CASE("pareto_subset splits by running dimension minima") {
    PointSet f = make_points({{1, 5}, {2, 4}, {2, 6}, {3, 3}});
    auto [p, q] = pareto_subset(f);
    CHECK(set_equals(p, make_points({{1, 5}, {2, 4}, {3, 3}})));
    CHECK(set_equals(q, make_points({{2, 6}})));
    CHECK(p.pareto_verified());

    PointSet one = make_points({{4, 4, 4}});
    auto [p1, q1] = pareto_subset(one);
    CHECK(set_equals(p1, one));
    CHECK(q1.empty());

    // anti-diagonal staircase: every point improves the dimension-2 minimum
    PointSet stair(2);
    for (int i = 0; i < 12; ++i) {
        std::vector<double> pt{double(i), double(12 - i)};
        stair.push_back(pt);
    }
    auto [p2, q2] = pareto_subset(stair);
    CHECK(q2.empty());
    CHECK(p2.size() == 12);
}

TEST_CASE("pareto_subset contracts on random inputs") {
    Rng rng(2211);
    for (int iter = 0; iter < 150; ++iter) {
        std::size_t d = 2 + rng.below(6);
        std::size_t n = 1 + rng.below(300);
        PointSet f = dedup(iter % 2 == 0 ? random_set(rng, n, d) : random_grid_set(rng, n, d, 6));
        auto [p, q] = pareto_subset(f);

        // P and Q partition F
        PointSet merged(d);
        for (std::size_t i = 0; i < p.size(); ++i) merged.push_back(p[i]);
        for (std::size_t i = 0; i < q.size(); ++i) merged.push_back(q[i]);
        REQUIRE(sorted_rows(merged) == sorted_rows(f));

        // P never contains a dominated point
        PointSet frontier = oracle_pareto(f);
        auto fr = sorted_rows(frontier);
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto pt = p[i];
            std::vector<double> v(pt.begin(), pt.end());
            REQUIRE(std::binary_search(fr.begin(), fr.end(), v));
        }

        // Q stays lexicographically sorted
        for (std::size_t i = 1; i < q.size(); ++i) {
            REQUIRE_FALSE(lex_less(q[i], q[i - 1]));
        }

        // in two dimensions P is the whole frontier
        if (d == 2) REQUIRE(sorted_rows(p) == fr);
    }
}

TEST_CASE("pre_nd filters the footnote sum with every tree") {
    PointSet f = footnote_sum();
    PointSet expect = make_points({{5, 6, 7}, {7, 3, 4}, {11, 5, 3}});
    for (TreeKind kind : kAllKinds) {
        FilterResult res = pre_nd(f, kind);
        CHECK(set_equals(res.frontier, expect));
    }
}

TEST_CASE("pre_nd on a Pareto set and on a staircase") {
    PointSet s = comparison_set();
    CHECK(set_equals(pre_nd(s, TreeKind::qnd_plus).frontier, s));

    // staircase: Q is empty, so the insert phase never compares points
    PointSet stair(2);
    for (int i = 0; i < 20; ++i) {
        std::vector<double> pt{double(i), double(20 - i)};
        stair.push_back(pt);
    }
    FilterResult res = pre_nd(stair, TreeKind::nd_plus);
    CHECK(set_equals(res.frontier, stair));
    CHECK(res.stats.comparisons == 0);
}

TEST_CASE("sym_nd merges two Pareto sets") {
    PointSet a = make_points({{1, 5}, {4, 2}});
    a.set_pareto_verified(true);
    PointSet b = make_points({{2, 3}, {3, 6}});
    b.set_pareto_verified(true);
    PointSet expect = make_points({{1, 5}, {4, 2}, {2, 3}});
    for (TreeKind kind : kAllKinds) {
        FilterResult res = sym_nd(a, b, kind);
        CHECK(set_equals(res.frontier, expect));
    }

    // a relabeled copy collapses to the set itself
    PointSet a2 = make_points({{4, 2}, {1, 5}});
    a2.set_pareto_verified(true);
    CHECK(set_equals(sym_nd(a, a2, TreeKind::tnd_plus).frontier, a));

    // mutually non-dominating sets merge whole
    PointSet c = make_points({{0, 9}, {9, 0}});
    c.set_pareto_verified(true);
    PointSet d = make_points({{4, 4}});
    d.set_pareto_verified(true);
    CHECK(sym_nd(c, d, TreeKind::nd_plus).frontier.size() == 3);
}

TEST_CASE("sym_nd rejects bad inputs") {
    PointSet a = make_points({{1, 5}});
    a.set_pareto_verified(true);
    PointSet unverified = make_points({{2, 3}});
    CHECK_THROWS_AS(sym_nd(a, unverified, TreeKind::nd_plus), std::invalid_argument);
    PointSet wrong = make_points({{1, 2, 3}});
    wrong.set_pareto_verified(true);
    CHECK_THROWS_AS(sym_nd(a, wrong, TreeKind::nd_plus), std::invalid_argument);
}

TEST_CASE("union_input concatenates and deduplicates") {
    PointSet a = make_points({{1, 5}, {4, 2}});
    PointSet b = make_points({{2, 3}, {3, 6}});
    CHECK(union_input(a, b).size() == 4);
    CHECK(set_equals(union_input(a, a), a));

    PointSet c = make_points({{2, 3}, {9, 9}});
    CHECK(union_input(a, union_input(b, c)).size() == 5);
}

TEST_CASE("all algorithm and tree combinations agree with the oracle") {
    Rng rng(424242);
    for (int seed = 0; seed < 30; ++seed) {
        std::size_t d = 2 + rng.below(7);
        bool gridded = seed % 3 == 0;
        PointSet a = gridded ? random_pareto(rng, 60 + rng.below(200), d, 7)
                             : random_pareto(rng, 60 + rng.below(200), d);
        PointSet b = gridded ? random_pareto(rng, 60 + rng.below(200), d, 7)
                             : random_pareto(rng, 60 + rng.below(200), d);
        LeafCapacity m{1 + rng.below(10)};

        PointSet u = union_input(a, b);
        auto u_expect = sorted_rows(oracle_pareto(u));
        for (TreeKind kind : kAllKinds) {
            REQUIRE(sorted_rows(plain_nd_red(u, kind, m).frontier) == u_expect);
            REQUIRE(sorted_rows(pre_nd(u, kind, m).frontier) == u_expect);
            REQUIRE(sorted_rows(sym_nd(a, b, kind, m).frontier) == u_expect);
        }

        if (a.size() * b.size() <= 20000) {
            PointSet s = minkowski_sum(a, b);
            auto s_expect = sorted_rows(oracle_pareto(s));
            for (TreeKind kind : kAllKinds) {
                REQUIRE(sorted_rows(plain_nd_red(s, kind, m).frontier) == s_expect);
                REQUIRE(sorted_rows(pre_nd(s, kind, m).frontier) == s_expect);
            }
        }
    }
}

TEST_CASE("comparison counts respect the worst-case bounds") {
    Rng rng(616);
    for (int seed = 0; seed < 25; ++seed) {
        std::size_t d = 2 + rng.below(7);
        PointSet a = random_pareto(rng, 40 + rng.below(120), d);
        PointSet b = random_pareto(rng, 40 + rng.below(120), d);
        PointSet f = union_input(a, b);
        const std::uint64_t n = f.size();
        for (TreeKind kind : kAllKinds) {
            FilterResult red = plain_nd_red(f, kind);
            REQUIRE(red.stats.comparisons <= (d - 1) * n * (n - 1) / 2);
            FilterResult pre = pre_nd(f, kind);
            REQUIRE(pre.stats.comparisons <= d * n * (n - 1) / 2);
            FilterResult sym = sym_nd(a, b, kind);
            const std::uint64_t na = a.size();
            const std::uint64_t nb = b.size();
            REQUIRE(sym.stats.comparisons <= d * (na * nb + na * na + nb * nb));
        }
    }
}

TEST_CASE("sym_nd is symmetric in its arguments") {
    Rng rng(99182);
    for (int seed = 0; seed < 20; ++seed) {
        std::size_t d = 2 + rng.below(5);
        PointSet a = random_pareto(rng, 30 + rng.below(150), d);
        PointSet b = random_pareto(rng, 30 + rng.below(150), d);
        for (TreeKind kind : kAllKinds) {
            REQUIRE(sorted_rows(sym_nd(a, b, kind).frontier) ==
                    sorted_rows(sym_nd(b, a, kind).frontier));
        }
    }
}

TEST_CASE("filtering a filter's output is the identity") {
    Rng rng(5040);
    for (int seed = 0; seed < 15; ++seed) {
        std::size_t d = 2 + rng.below(5);
        PointSet f = dedup(random_grid_set(rng, 150, d, 6));
        for (TreeKind kind : kAllKinds) {
            PointSet once = plain_nd_red(f, kind).frontier;
            REQUIRE(sorted_rows(plain_nd_red(once, kind).frontier) == sorted_rows(once));
            PointSet pre_once = pre_nd(f, kind).frontier;
            REQUIRE(sorted_rows(pre_nd(pre_once, kind).frontier) == sorted_rows(pre_once));
            REQUIRE(sorted_rows(sym_nd(once, once, kind).frontier) == sorted_rows(once));
        }
    }
}

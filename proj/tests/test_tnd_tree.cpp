#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "paretond/dominance.hpp"
#include "paretond/nd_tree.hpp"
#include "paretond/tnd_tree.hpp"

#include "golden.hpp"
#include "support.hpp"
#include "tree_checks.hpp"

using namespace paretond;
using test_support::brute_dominated;
using test_support::check_tree;
using test_support::comparison_set;
using test_support::Flavor;
using test_support::leaf_contents;
using test_support::random_pareto;
using test_support::rows;

namespace {

PointSet verified_comparison_set() { return oracle_pareto(comparison_set()); }

}  // namespace

TEST_CASE("tnd: golden build on the 11-point set, m = 4") {
    TndPlusTree tree = TndPlusTree::build(verified_comparison_set(), {4});

    NodeRef root = tree.root();
    REQUIRE_FALSE(root.is_leaf());
    CHECK(root.dim() == 0);
    CHECK(root.split_value() == 2);
    CHECK(root.plateau());
    CHECK(leaf_contents(root.left()) == rows({{1, 10, 2}}));

    NodeRef mid = root.middle();
    REQUIRE_FALSE(mid.is_leaf());
    CHECK(mid.dim() == 1);
    CHECK(mid.split_value() == 9);
    CHECK_FALSE(mid.plateau());
    CHECK(mid.excluded() == DimMask::of({0}));
    CHECK(leaf_contents(mid.left()) == rows({{2, 7, 8}, {2, 8, 7}}));
    CHECK(leaf_contents(mid.right()) == rows({{2, 9, 6}, {2, 11, 1}, {2, 12, 0}}));

    NodeRef r = root.right();
    REQUIRE_FALSE(r.is_leaf());
    CHECK(r.dim() == 1);
    CHECK(r.split_value() == 7);
    CHECK(r.plateau());
    CHECK(leaf_contents(r.left()) == rows({{7, 6, 1}, {8, 6, 0}}));
    CHECK(leaf_contents(r.middle()) == rows({{4, 7, 4}, {5, 7, 3}, {6, 7, 2}}));
    CHECK_FALSE(r.right().valid());  // no value above the plateau

    TreeShapeStats shape = tree.shape();
    CHECK(shape.max_depth == 2);
    CHECK(shape.min_depth == 1);
    CHECK(shape.balance == 1);
    CHECK(shape.leaf_count == 5);
    CHECK(shape.point_count == 11);

    check_tree(tree, {.flavor = Flavor::tnd, .m = 4});
}

TEST_CASE("tnd: distinct values everywhere match the median tree shape") {
    Rng rng(62);
    for (int seed = 0; seed < 10; ++seed) {
        std::size_t d = 2 + rng.below(5);
        PointSet pts = random_pareto(rng, 100 + rng.below(400), d);
        TndPlusTree tnd = TndPlusTree::build(pts, {6});
        NdPlusTree nd = NdPlusTree::build(pts, {6});
        TreeShapeStats a = tnd.shape();
        TreeShapeStats b = nd.shape();
        CHECK(a.max_depth == b.max_depth);
        CHECK(a.min_depth == b.min_depth);
        CHECK(a.node_count == b.node_count);
    }
}

TEST_CASE("tnd: a fully uniform split dimension puts everything in the middle") {
    PointSet s(3);
    for (std::size_t i = 0; i < 12; ++i) {
        std::vector<double> p{5.0, double(i), double(11 - i)};
        s.push_back(p);
    }
    s.set_pareto_verified(true);
    TndPlusTree tree = TndPlusTree::build(s, {4});
    NodeRef root = tree.root();
    REQUIRE_FALSE(root.is_leaf());
    CHECK(root.plateau());
    CHECK_FALSE(root.left().valid());
    CHECK_FALSE(root.right().valid());
    REQUIRE(root.middle().valid());
    CHECK(root.middle().excluded() == DimMask::of({0}));
    check_tree(tree, {.flavor = Flavor::tnd, .m = 4});
}

TEST_CASE("tnd: insert routing") {
    TndPlusTree tree = TndPlusTree::build(verified_comparison_set(), {4});

    std::vector<double> mid{2, 10, 3};  // plateau value, second dim >= 9
    tree.insert(mid);
    CHECK(leaf_contents(tree.root().middle().right()) ==
          rows({{2, 9, 6}, {2, 11, 1}, {2, 12, 0}, {2, 10, 3}}));

    std::vector<double> left{0, 9, 9};
    tree.insert(left);
    CHECK(leaf_contents(tree.root().left()) == rows({{1, 10, 2}, {0, 9, 9}}));

    std::vector<double> right{9, 9, 9};
    tree.insert(right);
    check_tree(tree, {.flavor = Flavor::tnd, .m = 4});

    TreeShapeStats shape = tree.shape();
    CHECK(shape.point_count == 14);
}

TEST_CASE("tnd: insert materializes a missing right child") {
    TndPlusTree tree = TndPlusTree::build(verified_comparison_set(), {4});
    REQUIRE_FALSE(tree.root().right().right().valid());
    std::vector<double> p{9, 8, 9};  // 9 > 2 right, then 8 > 7 right of the plateau
    tree.insert(p);
    REQUIRE(tree.root().right().right().valid());
    CHECK(leaf_contents(tree.root().right().right()) == rows({{9, 8, 9}}));
    check_tree(tree, {.flavor = Flavor::tnd, .m = 4});
}

TEST_CASE("tnd: golden dominance queries") {
    TndPlusTree tree = TndPlusTree::build(verified_comparison_set(), {4});
    FilterStats stats;

    std::vector<double> a{3, 12, 1};  // dominated by (2,11,1) through the middle subtree
    CHECK(tree.dominated(a, {}, stats));

    stats = {};
    std::vector<double> b{0, 0, 0};
    CHECK_FALSE(tree.dominated(b, {}, stats));
    CHECK(stats.leaf_scans == 0);

    std::vector<double> stored{2, 7, 8};
    CHECK_FALSE(tree.dominated(stored, {}, stats));
}

TEST_CASE("tnd: dominance queries agree with the brute-force scan") {
    Rng rng(13);
    for (int seed = 0; seed < 50; ++seed) {
        std::size_t d = 2 + rng.below(9);
        std::size_t n = 1 + rng.below(2000);
        PointSet pts = seed % 2 == 0 ? random_pareto(rng, n, d) : random_pareto(rng, n, d, 6);
        LeafCapacity m{1 + rng.below(10)};
        TndPlusTree tree = TndPlusTree::build(pts, m);

        FilterStats stats;
        std::vector<double> q(d);
        for (int probe = 0; probe < 60; ++probe) {
            if (probe % 3 == 0 && pts.size() > 0) {
                auto a = pts[rng.below(pts.size())];
                for (std::size_t k = 0; k < d; ++k) q[k] = a[k];
                if (probe % 6 == 0) q[rng.below(d)] += 1.0;
            } else {
                for (std::size_t k = 0; k < d; ++k) {
                    q[k] = seed % 2 == 0 ? rng.uniform(0, 1.2) : double(rng.below(8));
                }
            }
            REQUIRE(tree.dominated(q, {}, stats) == brute_dominated(pts, q));
        }
        if (seed % 10 == 0) check_tree(tree, {.flavor = Flavor::tnd, .m = m.value});
    }
}

TEST_CASE("tnd: build plus inserts keeps agreement") {
    Rng rng(14);
    for (int seed = 0; seed < 20; ++seed) {
        std::size_t d = 2 + rng.below(5);
        PointSet pts = random_pareto(rng, 100 + rng.below(500), d, 5);
        if (pts.size() < 2) continue;
        std::size_t half = pts.size() / 2;
        PointSet first(d);
        for (std::size_t i = 0; i < half; ++i) first.push_back(pts[i]);
        first.set_pareto_verified(true);

        LeafCapacity m{1 + rng.below(6)};
        TndPlusTree tree = TndPlusTree::build(first, m);
        for (std::size_t i = half; i < pts.size(); ++i) tree.insert(pts[i]);

        REQUIRE(tree.size() == pts.size());
        check_tree(tree, {.flavor = Flavor::tnd, .m = m.value});

        FilterStats stats;
        std::vector<double> q(d);
        for (int probe = 0; probe < 40; ++probe) {
            for (std::size_t k = 0; k < d; ++k) q[k] = double(rng.below(7));
            REQUIRE(tree.dominated(q, {}, stats) == brute_dominated(pts, q));
        }
    }
}

TEST_CASE("tnd: node count stays linear") {
    Rng rng(15);
    for (int seed = 0; seed < 20; ++seed) {
        std::size_t d = 2 + rng.below(8);
        PointSet pts = random_pareto(rng, 200 + rng.below(1000), d, 5);
        if (pts.empty()) continue;
        TndPlusTree tree = TndPlusTree::build(pts, {4});
        REQUIRE(tree.shape().node_count <= 2 * d * pts.size());
    }
}

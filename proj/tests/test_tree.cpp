#include <doctest.h>

#include "support/oracles.hpp"
#include "thompson/tree.hpp"

using thompson::common_multiple;
using thompson::compose;
using thompson::Dyadic;
using thompson::Forest;
using thompson::parse_forest;
using thompson::parse_tree;
using thompson::refinement_forest;
using thompson::refines;
using thompson::Tree;
using thompson::tree_union;
using thompson::trees_with_leaves;

TEST_CASE("shape validation") {
    CHECK_NOTHROW(Tree("0"));
    CHECK_NOTHROW(Tree("100"));
    CHECK_NOTHROW(Tree("11000"));
    CHECK_THROWS_AS(Tree("1100"), thompson::domain_error);
    CHECK_THROWS_AS(Tree("010"), thompson::domain_error);
    CHECK_THROWS_AS(Tree(""), thompson::domain_error);
    CHECK_THROWS_AS(Tree("102"), thompson::domain_error);
}

TEST_CASE("composition by vertical concatenation") {
    // Worked example: the three-tree forest stacked on the 3-leaf tree.
    Forest f = parse_forest("0,100,10100");
    Tree t("11000");
    CHECK(compose(f, t).shape() == "11010010100");

    // Trivial forest is the identity for composition.
    CHECK(compose(Forest::trivial(3), t) == t);

    // Arity mismatch is an error.
    Forest bad = parse_forest("0,0");
    CHECK_THROWS_AS(compose(bad, t), thompson::domain_error);
}

TEST_CASE("composition of forests is associative") {
    oracle::Rng rng(7001);
    for (int iter = 0; iter < 200; ++iter) {
        Forest a = oracle::random_forest(rng, 2, 3);
        Forest b = oracle::random_forest(rng, a.leaves(), 3);
        Forest c = oracle::random_forest(rng, b.leaves(), 3);
        CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
    }
}

TEST_CASE("common multiple of equal trees is trivial") {
    Tree a("100");
    auto [p, q] = common_multiple(a, a);
    CHECK(p.is_trivial());
    CHECK(q.is_trivial());
    CHECK(p.roots() == 2);
}

TEST_CASE("common multiple is the leafwise union and is least") {
    Tree a("10100");
    Tree b("11000");
    Tree m = tree_union(a, b);
    // Frozen from the exhaustive oracle below: union of the partitions
    // {1/2, 3/4} and {1/4, 1/2} is the uniform 4-leaf tree.
    CHECK(m.shape() == "1100100");
    auto [p, q] = common_multiple(a, b);
    CHECK(compose(p, a) == m);
    CHECK(compose(q, b) == m);

    // Exhaustive minimality: every common multiple with at most 6 leaves
    // factors through the union.
    for (int n = 1; n <= 6; ++n) {
        for (const Tree& u : trees_with_leaves(n)) {
            if (refines(u, a) && refines(u, b)) {
                CHECK(refines(u, m));
                CHECK(u.leaf_count() >= m.leaf_count());
            }
        }
    }
}

TEST_CASE("a leaf refines to anything") {
    Tree t("1101000");
    auto [p, q] = common_multiple(Tree::leaf(), t);
    CHECK(p.roots() == 1);
    CHECK(p.trees()[0] == t);
    CHECK(q.is_trivial());
    CHECK(compose(p, Tree::leaf()) == compose(q, t));
}

TEST_CASE("random common multiples satisfy the defining equation") {
    oracle::Rng rng(7002);
    for (int iter = 0; iter < 300; ++iter) {
        Tree a = oracle::random_tree(rng, 1 + static_cast<int>(rng() % 8));
        Tree b = oracle::random_tree(rng, 1 + static_cast<int>(rng() % 8));
        auto [p, q] = common_multiple(a, b);
        CHECK(compose(p, a) == compose(q, b));
    }
}

TEST_CASE("depth sequence round trip is the identity (exhaustive to 10 leaves)") {
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& t : trees_with_leaves(n)) {
            CHECK(Tree::from_depths(t.depths()) == t);
        }
    }
}

TEST_CASE("Catalan counts") {
    CHECK(trees_with_leaves(1).size() == 1);
    CHECK(trees_with_leaves(2).size() == 1);
    CHECK(trees_with_leaves(3).size() == 2);
    CHECK(trees_with_leaves(4).size() == 5);
    CHECK(trees_with_leaves(5).size() == 14);
    CHECK(trees_with_leaves(6).size() == 42);
}

TEST_CASE("leaf counts and invariants") {
    Tree t("11010010100");
    CHECK(t.leaf_count() == 6);
    CHECK(t.internal_count() == 5);
    CHECK(t.depths().size() == 6);
}

TEST_CASE("leaf cuts are the standard dyadic partition") {
    Tree s("10100");
    auto cuts = s.leaf_cuts();
    REQUIRE(cuts.size() == 4);
    CHECK(cuts[0] == Dyadic(0));
    CHECK(cuts[1] == Dyadic(1, 1));
    CHECK(cuts[2] == Dyadic(3, 2));
    CHECK(cuts[3] == Dyadic(1));
}

TEST_CASE("leaf paths") {
    Tree s("10100");
    auto p = s.leaf_paths();
    REQUIRE(p.size() == 3);
    CHECK(p[0] == "0");
    CHECK(p[1] == "10");
    CHECK(p[2] == "11");
}

TEST_CASE("tree parsing reports positions") {
    CHECK_THROWS_AS(parse_tree("1100"), thompson::parse_error);
    CHECK(parse_tree(" 1 1 0 0 0 ").shape() == "11000");
}

#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "thompson/element.hpp"
#include "thompson/plmap.hpp"

using thompson::act_word;
using thompson::compose;
using thompson::enumerate_elements;
using thompson::expand_pair;
using thompson::Flavor;
using thompson::Forest;
using thompson::generator;
using thompson::GroupElement;
using thompson::identity_perm;
using thompson::invert;
using thompson::is_reduced_pair;
using thompson::multiply;
using thompson::Perm;
using thompson::reduce_pair;
using thompson::Tree;
using thompson::TreePair;
using thompson::trees_with_leaves;

TEST_CASE("reduce_pair: trivial full cancellation") {
    GroupElement g = reduce_pair(Tree("100"), Tree("100"));
    CHECK(g.is_identity());
    CHECK(g.leaves() == 1);
}

TEST_CASE("reduce_pair: x0 pair is already reduced") {
    GroupElement g = reduce_pair(Tree("11000"), Tree("10100"));
    CHECK(g.top().shape() == "11000");
    CHECK(g.bottom().shape() == "10100");
    CHECK(g.leaves() == 3);
}

TEST_CASE("reduce_pair: stabilized pairs reduce to the same element") {
    oracle::Rng rng(101);
    for (int iter = 0; iter < 500; ++iter) {
        GroupElement g = oracle::random_element(rng, 6);
        Forest f = oracle::random_forest(rng, g.leaves(), 4);
        TreePair e = expand_pair(g, f);
        GroupElement back = reduce_pair(e.t, e.perm, e.s, Flavor::F);
        CHECK(back == g);
    }
}

TEST_CASE("reduce_pair is confluent under random removal orders") {
    oracle::Rng rng(102);
    for (int iter = 0; iter < 300; ++iter) {
        Flavor flavor = iter % 2 ? Flavor::F : Flavor::V;
        GroupElement g = oracle::random_element(rng, 6, flavor);
        Forest f = oracle::random_forest(rng, g.leaves(), 3);
        TreePair e = expand_pair(g, f);
        GroupElement a = reduce_pair(e.t, e.perm, e.s, flavor);
        GroupElement b = oracle::reduce_random_order(rng, e.t, e.perm, e.s, flavor);
        CHECK(a == b);
    }
}

TEST_CASE("malformed permutations are rejected") {
    Tree t("11000"), s("10100");
    CHECK_THROWS_AS(reduce_pair(t, Perm{0, 1}, s, Flavor::V), thompson::domain_error);
    CHECK_THROWS_AS(reduce_pair(t, Perm{0, 0, 1}, s, Flavor::V), thompson::domain_error);
    CHECK_THROWS_AS(reduce_pair(t, Perm{0, 2, 1}, s, Flavor::F), thompson::domain_error);
    CHECK_THROWS_AS(reduce_pair(t, Perm{0, 2, 1}, s, Flavor::T), thompson::domain_error);
    CHECK_NOTHROW(reduce_pair(t, Perm{1, 2, 0}, s, Flavor::T));
}

TEST_CASE("multiply: inverses cancel") {
    oracle::Rng rng(103);
    for (int iter = 0; iter < 1000; ++iter) {
        GroupElement g = oracle::random_element(rng, 8);
        CHECK(multiply(g, invert(g)).is_identity());
    }
}

TEST_CASE("multiply: associativity on random triples") {
    oracle::Rng rng(104);
    for (int iter = 0; iter < 1000; ++iter) {
        Flavor flavor = iter % 3 == 0 ? Flavor::F : (iter % 3 == 1 ? Flavor::T : Flavor::V);
        GroupElement g = oracle::random_element(rng, 6, flavor);
        GroupElement h = oracle::random_element(rng, 6, flavor);
        GroupElement k = oracle::random_element(rng, 6, flavor);
        CHECK(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
    }
}

TEST_CASE("multiply: x0 squared agrees with PL composition on samples") {
    GroupElement x0 = generator(0);
    GroupElement sq = multiply(x0, x0);
    thompson::PLMap direct = as_pl_map(sq);
    thompson::PLMap composed = compose(as_pl_map(x0), as_pl_map(x0));
    CHECK(direct == composed);
    oracle::Rng rng(105);
    for (int i = 0; i < 10000; ++i) {
        thompson::Dyadic x = oracle::random_dyadic(rng, 16);
        CHECK(direct.eval(x) == composed.eval(x));
    }
}

TEST_CASE("invert") {
    CHECK(invert(GroupElement::identity()).is_identity());
    GroupElement x0 = generator(0);
    GroupElement inv = invert(x0);
    CHECK(inv.top().shape() == "10100");
    CHECK(inv.bottom().shape() == "11000");
    oracle::Rng rng(106);
    for (int iter = 0; iter < 200; ++iter) {
        GroupElement g = oracle::random_element(rng, 8, Flavor::V);
        CHECK(invert(invert(g)) == g);
    }
}

TEST_CASE("generator conventions") {
    GroupElement x0 = generator(0);
    CHECK(x0.top().shape() == "11000");
    CHECK(x0.bottom().shape() == "10100");

    // x0 sends 1/2 to 1/4.
    thompson::PLMap m = as_pl_map(x0);
    CHECK(m.eval(thompson::Dyadic(1, 1)) == thompson::Dyadic(1, 2));

    // One caret is added per index: x_i has i + 3 leaves.
    CHECK(generator(1).leaves() == 4);
    CHECK(generator(7).leaves() == 10);

    // Defining relation of the presentation: x_{i+1} = x0^{-1} x_i x0.
    for (int i = 1; i <= 4; ++i) {
        GroupElement lhs = generator(i + 1);
        GroupElement rhs = multiply(multiply(invert(x0), generator(i)), x0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("act_word: identity and x0") {
    CHECK(act_word(GroupElement::identity(), "0110") == "0110");
    GroupElement x0 = generator(0);
    CHECK(act_word(x0, "0") == "00");
    CHECK(act_word(x0, "0110") == "00110");
    CHECK(act_word(x0, "10") == "01");
    CHECK(act_word(x0, "111") == "11");
    CHECK_THROWS_AS(act_word(x0, "1x0"), thompson::domain_error);
}

TEST_CASE("act_word: V swap acts on prefixes") {
    GroupElement swap = reduce_pair(Tree("100"), Perm{1, 0}, Tree("100"), Flavor::V);
    CHECK(act_word(swap, "01") == "11");
    CHECK(act_word(swap, "10") == "00");
}

TEST_CASE("act_word: too-short words raise a precision error") {
    GroupElement x0 = generator(0);
    CHECK_THROWS_AS(act_word(x0, "1"), thompson::domain_error);
    CHECK_THROWS_AS(act_word(x0, ""), thompson::domain_error);
}

TEST_CASE("act_word composes") {
    oracle::Rng rng(107);
    for (int iter = 0; iter < 300; ++iter) {
        Flavor flavor = iter % 2 ? Flavor::F : Flavor::V;
        GroupElement g = oracle::random_element(rng, 6, flavor);
        GroupElement h = oracle::random_element(rng, 6, flavor);
        std::string w;
        for (int i = 0; i < 24; ++i) w.push_back(rng() % 2 ? '1' : '0');
        CHECK(act_word(multiply(g, h), w) == act_word(g, act_word(h, w)));
    }
}

TEST_CASE("enumerate_elements: counts") {
    // Trees with 4 leaves number C_3 = 5.
    CHECK(trees_with_leaves(4).size() == 5);

    // Generate-then-reduce oracle: the reduced elements with at most n
    // leaves are exactly the distinct reductions of all pairs.
    for (int n = 1; n <= 5; ++n) {
        auto listed = enumerate_elements(n, Flavor::F);
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& g : listed) {
            CHECK(g.leaves() <= n);
            CHECK((g.leaves() == 1 || is_reduced_pair(g.top(), g.perm(), g.bottom())));
            CHECK(seen.insert({g.top().shape(), g.bottom().shape()}).second);
        }
        std::set<std::pair<std::string, std::string>> reduced;
        for (int k = 1; k <= n; ++k)
            for (const Tree& t : trees_with_leaves(k))
                for (const Tree& s : trees_with_leaves(k)) {
                    GroupElement g = reduce_pair(t, s);
                    reduced.insert({g.top().shape(), g.bottom().shape()});
                }
        CHECK(seen == reduced);
    }

    // Flavor V with at most 2 leaves: the identity and the swap.
    auto v2 = enumerate_elements(2, Flavor::V);
    CHECK(v2.size() == 2);
    CHECK(v2[0].is_identity());
    CHECK(v2[1].perm() == Perm{1, 0});
}

TEST_CASE("enumeration is deterministic") {
    auto a = enumerate_elements(5, Flavor::F);
    auto b = enumerate_elements(5, Flavor::F);
    CHECK(a == b);
}

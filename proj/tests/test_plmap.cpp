#include <doctest.h>

#include "support/oracles.hpp"
#include "thompson/plmap.hpp"

using thompson::as_pl_map;
using thompson::Dyadic;
using thompson::fixed_intervals;
using thompson::fixed_point_measure;
using thompson::Flavor;
using thompson::generator;
using thompson::GroupElement;
using thompson::invert;
using thompson::multiply;
using thompson::PLMap;

TEST_CASE("identity element gives the slope-1 map") {
    PLMap m = as_pl_map(GroupElement::identity());
    CHECK(m.is_identity());
    CHECK(m.pieces().size() == 1);
}

TEST_CASE("x0 has the expected breakpoint data") {
    PLMap m = as_pl_map(generator(0));
    auto bp = m.breakpoints();
    REQUIRE(bp.size() == 4);
    CHECK(bp[0] == Dyadic(0));
    CHECK(bp[1] == Dyadic(1, 1));
    CHECK(bp[2] == Dyadic(3, 2));
    CHECK(bp[3] == Dyadic(1));
    REQUIRE(m.pieces().size() == 3);
    CHECK(m.pieces()[0].slope_log2 == -1);
    CHECK(m.pieces()[1].slope_log2 == 0);
    CHECK(m.pieces()[2].slope_log2 == 1);
    // [0,1/2] -> [0,1/4], [1/2,3/4] -> [1/4,1/2], [3/4,1] -> [1/2,1]
    CHECK(m.eval(Dyadic(1, 1)) == Dyadic(1, 2));
    CHECK(m.eval(Dyadic(3, 2)) == Dyadic(1, 1));
    CHECK(m.eval(Dyadic(1)) == Dyadic(1));
}

TEST_CASE("as_pl_map is a homomorphism") {
    oracle::Rng rng(201);
    for (int iter = 0; iter < 300; ++iter) {
        GroupElement g = oracle::random_element(rng, 7);
        GroupElement h = oracle::random_element(rng, 7);
        CHECK(as_pl_map(multiply(g, h)) == compose(as_pl_map(g), as_pl_map(h)));
    }
}

TEST_CASE("faithfulness: identity iff identity PL map") {
    oracle::Rng rng(202);
    for (int iter = 0; iter < 300; ++iter) {
        GroupElement g = oracle::random_element(rng, 7);
        CHECK(g.is_identity() == as_pl_map(g).is_identity());
    }
}

TEST_CASE("V elements have no PL interval map") {
    GroupElement swap = thompson::reduce_pair(thompson::Tree("100"), thompson::Perm{1, 0},
                                              thompson::Tree("100"), Flavor::V);
    CHECK_THROWS_AS(as_pl_map(swap), thompson::domain_error);
}

TEST_CASE("T elements produce circle maps with wraparound") {
    GroupElement rot = thompson::reduce_pair(thompson::Tree("100"), thompson::Perm{1, 0},
                                             thompson::Tree("100"), Flavor::T);
    PLMap m = as_pl_map(rot);
    CHECK(m.circle());
    CHECK(m.eval(Dyadic(0)) == Dyadic(1, 1));
    CHECK(m.eval(Dyadic(3, 2)) == Dyadic(1, 2));
}

TEST_CASE("fixed point measure examples") {
    CHECK(fixed_point_measure(GroupElement::identity()) == Dyadic(1));
    CHECK(fixed_point_measure(generator(0)) == Dyadic(0));
    CHECK(fixed_point_measure(generator(1)) == Dyadic(1, 1));
}

TEST_CASE("fixed point measure is inversion invariant") {
    oracle::Rng rng(203);
    for (int iter = 0; iter < 200; ++iter) {
        GroupElement g = oracle::random_element(rng, 8);
        CHECK(fixed_point_measure(g) == fixed_point_measure(invert(g)));
    }
}

TEST_CASE("fixed set of a conjugate is the image of the fixed set") {
    oracle::Rng rng(204);
    for (int iter = 0; iter < 200; ++iter) {
        GroupElement g = oracle::random_element(rng, 7);
        GroupElement h = oracle::random_element(rng, 7);
        GroupElement conj = multiply(multiply(h, g), invert(h));
        auto fixed_g = fixed_intervals(g);
        auto fixed_c = fixed_intervals(conj);
        PLMap hm = as_pl_map(h);
        std::vector<std::pair<Dyadic, Dyadic>> image;
        for (const auto& [lo, hi] : fixed_g) {
            Dyadic a = hm.eval(lo), b = hm.eval(hi);
            if (!image.empty() && image.back().second == a)
                image.back().second = b;
            else
                image.emplace_back(a, b);
        }
        CHECK(image == fixed_c);
    }
}

TEST_CASE("inverse of a PL map") {
    PLMap m = as_pl_map(generator(0));
    PLMap inv = m.inverse();
    oracle::Rng rng(205);
    for (int i = 0; i < 200; ++i) {
        Dyadic x = oracle::random_dyadic(rng, 10);
        CHECK(inv.eval(m.eval(x)) == x);
    }
}

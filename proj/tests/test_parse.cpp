#include <doctest.h>

#include "support/oracles.hpp"
#include "thompson/parse.hpp"

using thompson::Flavor;
using thompson::generator;
using thompson::GroupElement;
using thompson::parse_element;
using thompson::print_element;

TEST_CASE("grammar: F, T, V forms") {
    CHECK(parse_element("11000/10100") == generator(0));
    CHECK(parse_element("0/0").is_identity());
    CHECK(parse_element(" 1 1000 / 10 100 ") == generator(0));

    GroupElement t = parse_element("100/r1/100");
    CHECK(t.flavor() == Flavor::T);
    CHECK(t.perm() == thompson::Perm{1, 0});

    GroupElement v = parse_element("100/[1,0]/100");
    CHECK(v.flavor() == Flavor::V);
    CHECK(v.perm() == thompson::Perm{1, 0});
}

TEST_CASE("reduction happens on ingest") {
    GroupElement g = parse_element("1100100/1100100");
    CHECK(g.is_identity());
}

TEST_CASE("parse errors carry positions") {
    using thompson::parse_error;
    CHECK_THROWS_AS(parse_element("1100/10100"), parse_error);
    CHECK_THROWS_AS(parse_element("11000"), parse_error);
    CHECK_THROWS_AS(parse_element("11000/100"), parse_error);
    CHECK_THROWS_AS(parse_element("11000/[0,1]/10100"), parse_error);
    CHECK_THROWS_AS(parse_element("11000/[0,0,1]/10100"), parse_error);
    CHECK_THROWS_AS(parse_element("11000/r/10100"), parse_error);
    CHECK_THROWS_AS(parse_element("abc/def"), parse_error);
}

TEST_CASE("round trip on all reduced elements with up to 8 leaves") {
    int count = 0;
    thompson::for_each_reduced(8, Flavor::F, [&](const GroupElement& g) {
        CHECK(parse_element(print_element(g)) == g);
        ++count;
    });
    CHECK(count > 1000);

    thompson::for_each_reduced(4, Flavor::V, [&](const GroupElement& g) {
        CHECK(parse_element(print_element(g)) == g);
    });
    thompson::for_each_reduced(5, Flavor::T, [&](const GroupElement& g) {
        CHECK(parse_element(print_element(g)) == g);
    });
}

TEST_CASE("printing uses the documented forms") {
    CHECK(print_element(generator(0)) == "11000/10100");
    CHECK(print_element(GroupElement::identity()) == "0/0");
    GroupElement t = parse_element("100/r1/100");
    CHECK(print_element(t) == "100/r1/100");
    GroupElement v = parse_element("100/[1,0]/100");
    CHECK(print_element(v) == "100/[1,0]/100");
}

#include <doctest.h>

#include "support/oracles.hpp"
#include "thompson/wreath.hpp"

#include <memory>

using thompson::compose_labelled;
using thompson::Forest;
using thompson::LabelledElement;
using thompson::Tree;
using thompson::wreath_equal;
using thompson::wreath_invert;
using thompson::wreath_multiply;
using thompson::WreathSpec;

namespace {

// Z/2 with the trivial embedding g -> (g, e).
std::shared_ptr<const WreathSpec> z2_trivial() {
    return WreathSpec::cyclic(2, {{0, 0}, {1, 0}});
}

// S3 as permutations of {0,1,2}; returns the multiplication table and the
// list of all endomorphisms (found by brute force).
struct S3Data {
    std::vector<std::vector<int>> mult;
    std::vector<std::vector<int>> endos;
};

const S3Data& s3_data() {
    static S3Data data = [] {
        S3Data d;
        std::vector<std::array<int, 3>> perms;
        std::array<int, 3> p{0, 1, 2};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        int n = static_cast<int>(perms.size());
        d.mult.assign(n, std::vector<int>(n));
        auto index_of = [&](const std::array<int, 3>& q) {
            for (int i = 0; i < n; ++i)
                if (perms[static_cast<std::size_t>(i)] == q) return i;
            return -1;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::array<int, 3> q;
                for (int k = 0; k < 3; ++k)
                    q[static_cast<std::size_t>(k)] =
                        perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                            perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])];
                d.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index_of(q);
            }
        // Brute-force endomorphisms: all maps fixing e that respect mult.
        std::vector<int> f(static_cast<std::size_t>(n));
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (f[static_cast<std::size_t>(d.mult[static_cast<std::size_t>(i)]
                                                              [static_cast<std::size_t>(j)])] !=
                            d.mult[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])]
                                  [static_cast<std::size_t>(f[static_cast<std::size_t>(j)])])
                            return;
                d.endos.push_back(f);
                return;
            }
            if (pos == 0) {
                f[0] = 0;
                self(self, 1);
                return;
            }
            for (int v = 0; v < n; ++v) {
                f[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        return d;
    }();
    return data;
}

std::shared_ptr<const WreathSpec> s3_spec(int endo_a, int endo_b) {
    const S3Data& d = s3_data();
    std::vector<std::pair<int, int>> split;
    for (int g = 0; g < 6; ++g)
        split.emplace_back(d.endos[static_cast<std::size_t>(endo_a)][static_cast<std::size_t>(g)],
                           d.endos[static_cast<std::size_t>(endo_b)][static_cast<std::size_t>(g)]);
    return std::make_shared<WreathSpec>(d.mult, split);
}

LabelledElement random_labelled(oracle::Rng& rng, std::shared_ptr<const WreathSpec> spec,
                                int max_leaves) {
    std::uniform_int_distribution<int> leaves(1, max_leaves);
    int n = leaves(rng);
    Tree t = oracle::random_tree(rng, n);
    Tree s = oracle::random_tree(rng, n);
    std::uniform_int_distribution<int> lab(0, spec->order() - 1);
    std::vector<int> lt, ls;
    for (int i = 0; i < n; ++i) {
        lt.push_back(lab(rng));
        ls.push_back(lab(rng));
    }
    return LabelledElement(std::move(spec), t, lt, s, ls);
}

}  // namespace

TEST_CASE("wreath spec validation") {
    CHECK_NOTHROW(z2_trivial());
    // split(e) must be (e, e)
    CHECK_THROWS_AS(WreathSpec::cyclic(2, {{1, 0}, {0, 0}}), thompson::domain_error);
    // split must be a homomorphism: g -> (g, g) works, g -> (g, 1-g) does not
    CHECK_NOTHROW(WreathSpec::cyclic(2, {{0, 0}, {1, 1}}));
    CHECK_THROWS_AS(WreathSpec::cyclic(3, {{0, 0}, {1, 2}, {2, 2}}), thompson::domain_error);
}

TEST_CASE("caret expansion pushes labels through the split") {
    auto spec = z2_trivial();
    // A single leaf labelled 1, expanded by one caret with unit labels,
    // carries (a_1, b_1) = (1, 0) on the children.
    auto composed = compose_labelled(*spec, Forest(Tree("100")), {0, 0}, Tree::leaf(), {1});
    CHECK(composed.tree.shape() == "100");
    CHECK(composed.labels == std::vector<int>{1, 0});
}

TEST_CASE("labelled inverses cancel to the unit with all labels e") {
    oracle::Rng rng(301);
    auto specs = {z2_trivial(), s3_spec(1, 2)};
    for (const auto& spec : specs) {
        for (int iter = 0; iter < 100; ++iter) {
            LabelledElement a = random_labelled(rng, spec, 6);
            LabelledElement prod = wreath_multiply(a, wreath_invert(a));
            CHECK(prod.top().is_leaf());
            CHECK(prod.bottom().is_leaf());
            CHECK(prod.top_labels() == std::vector<int>{0});
            CHECK(prod.bottom_labels() == std::vector<int>{0});
        }
    }
}

TEST_CASE("wreath multiplication is associative (Z/2 and S3)") {
    oracle::Rng rng(302);
    const S3Data& d = s3_data();
    REQUIRE(d.endos.size() >= 2);
    std::uniform_int_distribution<std::size_t> pick(0, d.endos.size() - 1);
    for (int iter = 0; iter < 200; ++iter) {
        std::shared_ptr<const WreathSpec> spec;
        if (iter % 2 == 0) {
            spec = iter % 4 == 0 ? z2_trivial() : WreathSpec::cyclic(2, {{0, 0}, {1, 1}});
        } else {
            spec = s3_spec(static_cast<int>(pick(rng)), static_cast<int>(pick(rng)));
        }
        LabelledElement a = random_labelled(rng, spec, 5);
        LabelledElement b = random_labelled(rng, spec, 5);
        LabelledElement c = random_labelled(rng, spec, 5);
        LabelledElement ab_c = wreath_multiply(wreath_multiply(a, b), c);
        LabelledElement a_bc = wreath_multiply(a, wreath_multiply(b, c));
        CHECK(wreath_equal(ab_c, a_bc));
    }
}

TEST_CASE("labelled reduction cancels only matching labels") {
    auto spec = z2_trivial();
    // Caret pair with equal labels reduces to the unit.
    LabelledElement e(spec, Tree("100"), {1, 0}, Tree("100"), {1, 0});
    CHECK(e.is_identity());
    CHECK(e.top().is_leaf());

    // Label 1 on the right child of the top cannot come from a push of the
    // trivial embedding (b_g = e for all g), so the pair stays unreduced.
    LabelledElement f(spec, Tree("100"), {0, 1}, Tree("100"), {0, 0});
    CHECK(!f.top().is_leaf());
    CHECK(!f.is_identity());
}

TEST_CASE("mismatched specs are rejected") {
    auto s1 = z2_trivial();
    auto s2 = z2_trivial();
    LabelledElement a = LabelledElement::identity(s1);
    LabelledElement b = LabelledElement::identity(s2);
    CHECK_THROWS_AS(wreath_multiply(a, b), thompson::domain_error);
}

#include "support/oracles.hpp"

#include <cmath>

namespace oracle {

using thompson::invert;
using thompson::is_identity_perm;
using thompson::rotation_amount;

Tree random_tree(Rng& rng, int leaves) {
    if (leaves == 1) return Tree::leaf();
    std::uniform_int_distribution<int> split(1, leaves - 1);
    int k = split(rng);
    return Tree::caret(random_tree(rng, k), random_tree(rng, leaves - k));
}

Forest random_forest(Rng& rng, int roots, int max_extra_carets) {
    std::uniform_int_distribution<int> extra(0, max_extra_carets);
    int carets = extra(rng);
    std::vector<int> sizes(static_cast<std::size_t>(roots), 1);
    std::uniform_int_distribution<int> pick(0, roots - 1);
    for (int i = 0; i < carets; ++i) ++sizes[static_cast<std::size_t>(pick(rng))];
    std::vector<Tree> trees;
    trees.reserve(static_cast<std::size_t>(roots));
    for (int s : sizes) trees.push_back(random_tree(rng, s));
    return Forest(std::move(trees));
}

GroupElement random_element(Rng& rng, int max_leaves, Flavor flavor) {
    std::uniform_int_distribution<int> leaves(1, max_leaves);
    int n = leaves(rng);
    Tree t = random_tree(rng, n);
    Tree s = random_tree(rng, n);
    Perm perm;
    if (flavor == Flavor::F) {
        perm = thompson::identity_perm(n);
    } else if (flavor == Flavor::T) {
        std::uniform_int_distribution<int> rot(0, n - 1);
        perm = thompson::rotation_perm(n, rot(rng));
    } else {
        perm = thompson::identity_perm(n);
        std::shuffle(perm.begin(), perm.end(), rng);
    }
    return GroupElement(t, perm, s, flavor);
}

Dyadic random_dyadic(Rng& rng, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    unsigned e = ex(rng);
    std::uniform_int_distribution<long long> num(0, (1LL << e));
    return Dyadic(thompson::BigInt(num(rng)), e);
}

namespace {

bool siblings(const std::vector<std::string>& paths, int i) {
    const std::string& a = paths[static_cast<std::size_t>(i)];
    const std::string& b = paths[static_cast<std::size_t>(i + 1)];
    return a.size() == b.size() && !a.empty() && a.back() == '0' && b.back() == '1' &&
           a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
}

Tree drop_caret(const Tree& t, int leaf) {
    std::vector<int> d = t.depths();
    d.erase(d.begin() + leaf + 1);
    d[static_cast<std::size_t>(leaf)] -= 1;
    return Tree::from_depths(d);
}

}  // namespace

GroupElement reduce_random_order(Rng& rng, Tree t, Perm perm, Tree s, Flavor flavor) {
    for (;;) {
        int n = s.leaf_count();
        auto sp = s.leaf_paths();
        auto tp = t.leaf_paths();
        std::vector<int> candidates;
        for (int i = 0; i + 1 < n; ++i) {
            if (!siblings(sp, i)) continue;
            int m = perm[static_cast<std::size_t>(i)];
            if (perm[static_cast<std::size_t>(i + 1)] != m + 1) continue;
            if (siblings(tp, m)) candidates.push_back(i);
        }
        if (candidates.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        int i = candidates[pick(rng)];
        int m = perm[static_cast<std::size_t>(i)];
        s = drop_caret(s, i);
        t = drop_caret(t, m);
        Perm np(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < n - 1; ++j) {
            int old = j <= i ? j : j + 1;
            int img = perm[static_cast<std::size_t>(old)];
            np[static_cast<std::size_t>(j)] = img <= m ? img : img - 1;
        }
        perm = std::move(np);
    }
    return GroupElement(t, perm, s, flavor);
}

double koopman_integral(const GroupElement& g) {
    thompson::PLMap inv = as_pl_map(invert(g));
    double total = 0.0;
    for (const auto& piece : inv.pieces()) {
        double width = (piece.hi - piece.lo).to_double();
        total += width * std::pow(2.0, piece.slope_log2 / 2.0);
    }
    return total;
}

}  // namespace oracle

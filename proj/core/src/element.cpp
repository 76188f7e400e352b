#include "thompson/element.hpp"

#include <algorithm>
#include <numeric>

namespace thompson {

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm rotation_perm(int n, int k) {
    Perm p(static_cast<std::size_t>(n));
    k = ((k % n) + n) % n;
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + k) % n;
    return p;
}

Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

Perm compose_perms(const Perm& outer, const Perm& inner) {
    if (outer.size() != inner.size()) throw domain_error("permutation size mismatch");
    Perm out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

bool is_identity_perm(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

std::optional<int> rotation_amount(const Perm& p) {
    int n = static_cast<int>(p.size());
    if (n == 0) return std::nullopt;
    int k = p[0];
    for (int i = 0; i < n; ++i)
        if (p[static_cast<std::size_t>(i)] != (i + k) % n) return std::nullopt;
    return k;
}

namespace {

void validate(const Tree& t, const Perm& perm, const Tree& s, Flavor flavor) {
    int n = s.leaf_count();
    if (t.leaf_count() != n)
        throw domain_error("tree pair has mismatched leaf counts (" +
                           std::to_string(t.leaf_count()) + " vs " + std::to_string(n) + ")");
    if (static_cast<int>(perm.size()) != n)
        throw domain_error("permutation size does not match leaf count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw domain_error("leaf map is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (flavor == Flavor::F && !is_identity_perm(perm))
        throw domain_error("flavor F requires the identity leaf permutation");
    if (flavor == Flavor::T && !rotation_amount(perm))
        throw domain_error("flavor T requires a cyclic leaf rotation");
}

// Leaves i, i+1 are siblings iff their paths differ only in the last step.
bool siblings(const std::vector<std::string>& paths, int i) {
    const std::string& a = paths[static_cast<std::size_t>(i)];
    const std::string& b = paths[static_cast<std::size_t>(i + 1)];
    return a.size() == b.size() && !a.empty() && a.back() == '0' && b.back() == '1' &&
           a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
}

Tree remove_caret(const Tree& t, int leaf) {
    std::vector<int> d = t.depths();
    d.erase(d.begin() + leaf + 1);
    d[static_cast<std::size_t>(leaf)] -= 1;
    return Tree::from_depths(d);
}

}  // namespace

bool is_reduced_pair(const Tree& t, const Perm& perm, const Tree& s) {
    int n = s.leaf_count();
    auto sp = s.leaf_paths();
    auto tp = t.leaf_paths();
    for (int i = 0; i + 1 < n; ++i) {
        if (!siblings(sp, i)) continue;
        int m = perm[static_cast<std::size_t>(i)];
        if (perm[static_cast<std::size_t>(i + 1)] != m + 1) continue;
        if (siblings(tp, m)) return false;
    }
    return true;
}

GroupElement::GroupElement(Tree t, Perm perm, Tree s, Flavor flavor)
    : t_(std::move(t)), perm_(std::move(perm)), s_(std::move(s)), flavor_(flavor) {
    validate(t_, perm_, s_, flavor_);
    // Remove common carets until none remain (leftmost first; the result is
    // independent of the order, which the tests exercise separately).
    for (;;) {
        int n = s_.leaf_count();
        auto sp = s_.leaf_paths();
        auto tp = t_.leaf_paths();
        int found = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (!siblings(sp, i)) continue;
            int m = perm_[static_cast<std::size_t>(i)];
            if (perm_[static_cast<std::size_t>(i + 1)] != m + 1) continue;
            if (!siblings(tp, m)) continue;
            found = i;
            break;
        }
        if (found < 0) break;
        int m = perm_[static_cast<std::size_t>(found)];
        s_ = remove_caret(s_, found);
        t_ = remove_caret(t_, m);
        Perm np(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < n - 1; ++j) {
            int old = j <= found ? j : j + 1;
            int img = perm_[static_cast<std::size_t>(old)];
            np[static_cast<std::size_t>(j)] = img <= m ? img : img - 1;
        }
        perm_ = std::move(np);
    }
}

GroupElement GroupElement::identity(Flavor flavor) {
    return GroupElement(Tree::leaf(), identity_perm(1), Tree::leaf(), flavor);
}

GroupElement reduce_pair(const Tree& t, const Perm& perm, const Tree& s, Flavor flavor) {
    return GroupElement(t, perm, s, flavor);
}

TreePair expand_pair(const Tree& t, const Perm& perm, const Tree& s, const Forest& f) {
    int n = s.leaf_count();
    if (f.roots() != n) throw domain_error("expansion forest arity mismatch");
    Perm inv = inverse_perm(perm);
    std::vector<Tree> transported;
    transported.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m)
        transported.push_back(f.trees()[static_cast<std::size_t>(inv[static_cast<std::size_t>(m)])]);
    Forest f_t(std::move(transported));

    Tree s2 = compose(f, s);
    Tree t2 = compose(f_t, t);

    // Block offsets on both sides.
    std::vector<int> s_off(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        s_off[static_cast<std::size_t>(i) + 1] =
            s_off[static_cast<std::size_t>(i)] + f.trees()[static_cast<std::size_t>(i)].leaf_count();
    std::vector<int> t_off(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 0; m < n; ++m)
        t_off[static_cast<std::size_t>(m) + 1] =
            t_off[static_cast<std::size_t>(m)] + f_t.trees()[static_cast<std::size_t>(m)].leaf_count();

    Perm lifted(static_cast<std::size_t>(f.leaves()));
    for (int i = 0; i < n; ++i) {
        int m = perm[static_cast<std::size_t>(i)];
        int k = f.trees()[static_cast<std::size_t>(i)].leaf_count();
        for (int r = 0; r < k; ++r)
            lifted[static_cast<std::size_t>(s_off[static_cast<std::size_t>(i)] + r)] =
                t_off[static_cast<std::size_t>(m)] + r;
    }
    return {std::move(t2), std::move(lifted), std::move(s2)};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    Flavor flavor = std::max(g.flavor(), h.flavor());
    auto [p, q] = common_multiple(g.bottom(), h.top());
    TreePair ge = expand_pair(g, p);
    // Expanding h's top tree: expand the inverse pair by q, then swap back.
    TreePair hi = expand_pair(h.bottom(), inverse_perm(h.perm()), h.top(), q);
    Perm h_perm = inverse_perm(hi.perm);
    // ge.s == hi.s (the common multiple); cancel it.
    return GroupElement(ge.t, compose_perms(ge.perm, h_perm), hi.t, flavor);
}

GroupElement invert(const GroupElement& g) {
    return GroupElement(g.bottom(), inverse_perm(g.perm()), g.top(), g.flavor());
}

GroupElement generator(int i) {
    if (i < 0) throw domain_error("generator index must be nonnegative");
    std::string prefix;
    for (int k = 0; k < i; ++k) prefix += "10";
    Tree t(prefix + "11000");
    Tree s(prefix + "10100");
    return GroupElement(t, identity_perm(t.leaf_count()), s, Flavor::F);
}

std::string act_word(const GroupElement& g, const std::string& w) {
    for (char c : w)
        if (c != '0' && c != '1') throw domain_error("binary word must consist of 0s and 1s");
    auto sp = g.bottom().leaf_paths();
    auto tp = g.top().leaf_paths();
    for (int i = 0; i < g.leaves(); ++i) {
        const std::string& path = sp[static_cast<std::size_t>(i)];
        if (w.size() >= path.size() && w.compare(0, path.size(), path) == 0) {
            const std::string& image =
                tp[static_cast<std::size_t>(g.perm()[static_cast<std::size_t>(i)])];
            return image + w.substr(path.size());
        }
    }
    throw domain_error("word too short to determine a leaf; supply a longer word");
}

void for_each_reduced(int max_leaves, Flavor flavor,
                      const std::function<void(const GroupElement&)>& fn) {
    if (max_leaves < 1) throw domain_error("max_leaves must be at least 1");
    for (int n = 1; n <= max_leaves; ++n) {
        for (const Tree& t : trees_with_leaves(n)) {
            for (const Tree& s : trees_with_leaves(n)) {
                if (flavor == Flavor::F) {
                    Perm id = identity_perm(n);
                    if (n == 1 || is_reduced_pair(t, id, s)) fn(GroupElement(t, id, s, flavor));
                } else if (flavor == Flavor::T) {
                    for (int k = 0; k < n; ++k) {
                        Perm p = rotation_perm(n, k);
                        if (n == 1 || is_reduced_pair(t, p, s)) fn(GroupElement(t, p, s, flavor));
                        if (n == 1) break;  // rotations coincide on one leaf
                    }
                } else {
                    Perm p = identity_perm(n);
                    std::sort(p.begin(), p.end());
                    do {
                        if (n == 1 || is_reduced_pair(t, p, s)) fn(GroupElement(t, p, s, flavor));
                    } while (std::next_permutation(p.begin(), p.end()));
                }
            }
        }
    }
}

std::vector<GroupElement> enumerate_elements(int max_leaves, Flavor flavor) {
    std::vector<GroupElement> out;
    for_each_reduced(max_leaves, flavor, [&](const GroupElement& g) { out.push_back(g); });
    return out;
}

}  // namespace thompson

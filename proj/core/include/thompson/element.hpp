#pragma once

// Elements of Thompson's groups F ⊂ T ⊂ V as reduced tree-pair fractions
// t/s with a leaf bijection (s-leaf index -> t-leaf index). An element acts
// by mapping the dyadic interval of s-leaf i onto that of t-leaf perm(i).

#include "thompson/tree.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace thompson {

enum class Flavor { F, T, V };

inline const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::F: return "F";
        case Flavor::T: return "T";
        default: return "V";
    }
}

using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm rotation_perm(int n, int k);
Perm inverse_perm(const Perm& p);
Perm compose_perms(const Perm& outer, const Perm& inner);  // outer ∘ inner
bool is_identity_perm(const Perm& p);
// Rotation amount if p is i -> (i+k) mod n, else nullopt.
std::optional<int> rotation_amount(const Perm& p);

class GroupElement {
public:
    // Validates, then removes common carets until the pair is reduced.
    GroupElement(Tree t, Perm perm, Tree s, Flavor flavor);

    static GroupElement identity(Flavor flavor = Flavor::F);

    const Tree& top() const { return t_; }     // target tree t
    const Tree& bottom() const { return s_; }  // source tree s
    const Perm& perm() const { return perm_; }
    Flavor flavor() const { return flavor_; }
    int leaves() const { return s_.leaf_count(); }
    bool is_identity() const { return s_.is_leaf(); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    Tree t_;
    Perm perm_;
    Tree s_;
    Flavor flavor_;
};

// Factory matching the spec operation name.
GroupElement reduce_pair(const Tree& t, const Perm& perm, const Tree& s,
                         Flavor flavor = Flavor::F);
inline GroupElement reduce_pair(const Tree& t, const Tree& s) {
    return reduce_pair(t, identity_perm(s.leaf_count()), s, Flavor::F);
}

// Unreduced pair expansion: (f^perm ∘ t, lifted perm, f ∘ s). The tree
// grafted at s-leaf i is transported to t-leaf perm(i); the lifted
// permutation maps its leaves blockwise in order.
struct TreePair {
    Tree t;
    Perm perm;
    Tree s;
};
TreePair expand_pair(const Tree& t, const Perm& perm, const Tree& s, const Forest& f);
inline TreePair expand_pair(const GroupElement& g, const Forest& f) {
    return expand_pair(g.top(), g.perm(), g.bottom(), f);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return multiply(g, h);
}

// Standard generator x_i of F: x_0 = 11000/10100, and x_{i+1} arises from
// x_i by grafting a caret chain below the rightmost leaf (i + 3 leaves).
GroupElement generator(int i);

// Cantor-space action: replace the s-leaf address prefix of w by the image
// t-leaf address. Throws domain_error when w is too short to select a leaf.
std::string act_word(const GroupElement& g, const std::string& w);

// All reduced elements with at most max_leaves leaves, identity included,
// each exactly once, ordered by (leaf count, t shape, s shape, perm).
void for_each_reduced(int max_leaves, Flavor flavor,
                      const std::function<void(const GroupElement&)>& fn);
std::vector<GroupElement> enumerate_elements(int max_leaves, Flavor flavor);

// True when no common caret is removable from (t, perm, s).
bool is_reduced_pair(const Tree& t, const Perm& perm, const Tree& s);

}  // namespace thompson

#pragma once

// Ordered rooted full binary trees encoded as preorder bitstrings
// ('1' = internal vertex with two children, '0' = leaf) and forests
// (nonempty sequences of trees). Composition is vertical concatenation:
// compose(f, t) grafts tree i of f onto leaf i of t.

#include "thompson/exact.hpp"

#include <string>
#include <vector>

namespace thompson {

class Tree {
public:
    Tree() : shape_("0") {}
    explicit Tree(std::string shape);

    static Tree leaf() { return Tree(); }
    static Tree caret(const Tree& l, const Tree& r) {
        return Tree("1" + l.shape_ + r.shape_);
    }

    const std::string& shape() const { return shape_; }
    int leaf_count() const { return static_cast<int>((shape_.size() + 1) / 2); }
    int internal_count() const { return leaf_count() - 1; }
    bool is_leaf() const { return shape_ == "0"; }

    Tree left() const;
    Tree right() const;

    // Distance of each leaf to the root, left to right.
    std::vector<int> depths() const;
    static Tree from_depths(const std::vector<int>& depths);

    // Root-to-leaf path of each leaf (0 = left edge, 1 = right edge).
    std::vector<std::string> leaf_paths() const;

    // Left endpoint of the dyadic interval of each leaf, plus the final 1.
    std::vector<Dyadic> leaf_cuts() const;

    friend bool operator==(const Tree&, const Tree&) = default;
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
        if (a.leaf_count() != b.leaf_count())
            return a.leaf_count() <=> b.leaf_count();
        return a.shape_ <=> b.shape_;
    }

private:
    friend class Forest;
    struct unchecked {};
    Tree(std::string shape, unchecked) : shape_(std::move(shape)) {}

    std::string shape_;
};

class Forest {
public:
    explicit Forest(std::vector<Tree> trees);
    explicit Forest(const Tree& t) : trees_{t} {}

    static Forest trivial(int roots) {
        return Forest(std::vector<Tree>(static_cast<std::size_t>(roots), Tree::leaf()));
    }

    const std::vector<Tree>& trees() const { return trees_; }
    int roots() const { return static_cast<int>(trees_.size()); }
    int leaves() const;
    bool is_trivial() const;

    friend bool operator==(const Forest&, const Forest&) = default;

private:
    std::vector<Tree> trees_;
};

// f∘t: tree i of f grafted onto leaf i of t. Throws domain_error when
// roots(f) != leaves(t).
Tree compose(const Forest& f, const Tree& t);
Forest compose(const Forest& f, const Forest& t);

// Graft `sub` at leaf `leaf_index` of t (all other leaves untouched).
Tree graft_at(const Tree& t, int leaf_index, const Tree& sub);

// Leafwise union: the least common refinement of a and b.
Tree tree_union(const Tree& a, const Tree& b);

// True when u = p∘a for some forest p (a is a "bottom part" of u).
bool refines(const Tree& u, const Tree& a);

// The unique forest p with p∘a = u; throws domain_error if !refines(u, a).
Forest refinement_forest(const Tree& u, const Tree& a);

// Least pair (p, q) with p∘a = q∘b (both equal tree_union(a, b)).
std::pair<Forest, Forest> common_multiple(const Tree& a, const Tree& b);

// All trees with exactly n leaves, ordered by shape string; memoized.
const std::vector<Tree>& trees_with_leaves(int n);

// Parsing of the text forms ("11000" / comma-separated list).
Tree parse_tree(const std::string& text);
Forest parse_forest(const std::string& text);

}  // namespace thompson

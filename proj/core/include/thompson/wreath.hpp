#pragma once

// Labelled-forest fraction calculus: forests with leaves labelled by
// elements of a finite group Γ, composed through a splitting homomorphism
// g -> (a_g, b_g) into Γ×Γ. Pushing a label through a caret replaces it by
// its split on the children; the group of fractions extends F by ⊕Γ.

#include "thompson/element.hpp"

#include <memory>
#include <vector>

namespace thompson {

class WreathSpec {
public:
    // mult[i][j] = i·j; split[i] = (a_i, b_i). Index 0 must be the unit.
    WreathSpec(std::vector<std::vector<int>> mult, std::vector<std::pair<int, int>> split);

    static std::shared_ptr<const WreathSpec> cyclic(int n, std::vector<std::pair<int, int>> split);

    int order() const { return static_cast<int>(mult_.size()); }
    int mul(int g, int h) const { return mult_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int inv(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
    int a(int g) const { return split_[static_cast<std::size_t>(g)].first; }
    int b(int g) const { return split_[static_cast<std::size_t>(g)].second; }

    // Iterated split along a root-to-leaf path (0 = left, 1 = right).
    int push(int g, const std::string& path) const;

    // Stable equality: g ~ h when some finite tree of iterated splits makes
    // every leaf label literally agree. Coincides with g == h whenever the
    // split is injective.
    bool stably_equal(int g, int h) const {
        return stable_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
    }

    // The k with (a_k, b_k) = (x, y), if any (smallest index when the split
    // is not injective).
    int unsplit(int x, int y) const {
        return unsplit_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }

private:
    std::vector<std::vector<int>> mult_;
    std::vector<std::pair<int, int>> split_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> unsplit_;      // -1 when not attained
    std::vector<std::vector<char>> stable_;
};

class LabelledElement {
public:
    // Fraction (t, labels_t) / (s, labels_s); reduced on construction.
    LabelledElement(std::shared_ptr<const WreathSpec> spec, Tree t, std::vector<int> labels_t,
                    Tree s, std::vector<int> labels_s);

    static LabelledElement identity(std::shared_ptr<const WreathSpec> spec);

    const std::shared_ptr<const WreathSpec>& spec() const { return spec_; }
    const Tree& top() const { return t_; }
    const Tree& bottom() const { return s_; }
    const std::vector<int>& top_labels() const { return lt_; }
    const std::vector<int>& bottom_labels() const { return ls_; }

    bool is_identity() const;

private:
    std::shared_ptr<const WreathSpec> spec_;
    Tree t_;
    std::vector<int> lt_;
    Tree s_;
    std::vector<int> ls_;
};

// Composition of a labelled forest on top of a labelled tree: the lower
// leaf labels are pushed through the grafted trees and multiply the upper
// labels on the left.
struct LabelledTree {
    Tree tree;
    std::vector<int> labels;
};
LabelledTree compose_labelled(const WreathSpec& spec, const Forest& f,
                              const std::vector<int>& f_labels, const Tree& t,
                              const std::vector<int>& t_labels);

LabelledElement wreath_multiply(const LabelledElement& a, const LabelledElement& b);
LabelledElement wreath_invert(const LabelledElement& a);

// Fraction equality (not representation equality): both sides expand to a
// literally equal labelled pair.
bool wreath_equal(const LabelledElement& a, const LabelledElement& b);

}  // namespace thompson

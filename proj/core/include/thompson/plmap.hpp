#pragma once

// Exact piecewise-linear maps with dyadic breakpoints and power-of-two
// slopes: the evaluation oracle for F (interval) and T (circle).

#include "thompson/element.hpp"
#include "thompson/exact.hpp"

#include <vector>

namespace thompson {

struct PLPiece {
    Dyadic lo, hi;      // domain interval [lo, hi]
    int slope_log2;     // slope = 2^slope_log2
    Dyadic offset;      // value = 2^slope_log2 * x + offset

    Dyadic eval(const Dyadic& x) const { return x.shifted(slope_log2) + offset; }

    friend bool operator==(const PLPiece&, const PLPiece&) = default;
};

class PLMap {
public:
    PLMap() = default;
    PLMap(std::vector<PLPiece> pieces, bool circle);

    const std::vector<PLPiece>& pieces() const { return pieces_; }
    bool circle() const { return circle_; }

    // For circle maps the value is reduced mod 1.
    Dyadic eval(const Dyadic& x) const;

    std::vector<Dyadic> breakpoints() const;

    bool is_identity() const;

    PLMap inverse() const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<PLPiece> pieces_;
    bool circle_ = false;
};

// Leaf-interval map of g; supported for flavors F and T (V has no PL
// interval realization and throws domain_error).
PLMap as_pl_map(const GroupElement& g);

// g ∘ h as interval maps (flavor F only; pieces of the composite are the
// pullback-refined pieces of h).
PLMap compose(const PLMap& g, const PLMap& h);

// Lebesgue measure of { x in (0,1) : g x = x }, exact. Flavor F.
Dyadic fixed_point_measure(const GroupElement& g);

// Maximal intervals of positive length on which g is the identity.
std::vector<std::pair<Dyadic, Dyadic>> fixed_intervals(const GroupElement& g);

}  // namespace thompson

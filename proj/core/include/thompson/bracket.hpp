#pragma once

// Kauffman bracket state sum with exact Laurent-polynomial arithmetic.
// A-smoothing joins (p0,p1) and (p2,p3); B-smoothing joins (p0,p3) and
// (p1,p2); loop value δ = -A² - A⁻²; ⟨unknot⟩ = 1.

#include "thompson/link.hpp"

#include <map>
#include <string>

namespace thompson {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long constant) {
        if (constant) coeffs_[0] = constant;
    }
    static LaurentPoly monomial(long long coeff, int exponent) {
        LaurentPoly p;
        if (coeff) p.coeffs_[exponent] = coeff;
        return p;
    }

    const std::map<int, long long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    LaurentPoly operator-() const;
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a += -b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    // Substitute A -> A^{-1}.
    LaurentPoly invert_variable() const;

    std::string str() const;  // e.g. "-A^4 + 2 - A^-4"

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, long long> coeffs_;  // exponent -> coefficient, no zeros
};

// δ^k for k >= 0, cached.
const LaurentPoly& delta_pow(int k);

inline constexpr int kDefaultMaxStateSumCrossings = 24;

LaurentPoly kauffman_bracket(const LinkDiagram& d,
                             int max_crossings = kDefaultMaxStateSumCrossings);

struct SimplifyResult {
    LinkDiagram diagram;
    int twist;  // ⟨input⟩ = (-A³)^twist · ⟨diagram⟩
};

// Greedy Reidemeister-1 and -2 removal. Split circles produced by R2
// removals stay in the diagram as free loops.
SimplifyResult simplify(const LinkDiagram& d);

// (-A³)^k as a Laurent polynomial (k may be negative).
LaurentPoly twist_factor(int k);

// (-A³)^{-writhe} · ⟨d⟩; single-component diagrams only.
LaurentPoly normalized_bracket(const LinkDiagram& d,
                               int max_crossings = kDefaultMaxStateSumCrossings);

}  // namespace thompson

#pragma once

// Positive-definiteness harness: Gram matrices of a coefficient function
// over a finite element set, with the minimum eigenvalue reported.

#include "thompson/element.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace thompson {

inline constexpr double kDefaultPsdSlack = 1e-8;

using CoeffFn = std::function<std::complex<double>(const GroupElement&)>;

struct GramResult {
    std::vector<std::vector<std::complex<double>>> matrix;  // M[g][h] = coeff(g^{-1} h)
    double min_eigenvalue;

    bool psd(double slack = kDefaultPsdSlack) const { return min_eigenvalue >= -slack; }
};

GramResult gram_psd(const CoeffFn& coeff, const std::vector<GroupElement>& elems);

}  // namespace thompson

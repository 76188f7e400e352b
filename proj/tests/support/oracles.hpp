#pragma once

// Test-only oracles and generators, kept independent of the library code
// paths they are used to check.

#include "thompson/element.hpp"
#include "thompson/plmap.hpp"

#include <random>
#include <string>
#include <vector>

namespace oracle {

using thompson::Dyadic;
using thompson::Flavor;
using thompson::Forest;
using thompson::GroupElement;
using thompson::Perm;
using thompson::Tree;

using Rng = std::mt19937_64;

Tree random_tree(Rng& rng, int leaves);
Forest random_forest(Rng& rng, int roots, int max_extra_carets);
GroupElement random_element(Rng& rng, int max_leaves, Flavor flavor = Flavor::F);
Dyadic random_dyadic(Rng& rng, unsigned max_exp);

// Caret removal in a random order; used to check confluence of reduction.
GroupElement reduce_random_order(Rng& rng, Tree t, Perm perm, Tree s, Flavor flavor);

// Integral of sqrt((g^{-1})') over [0,1] via the exact piecewise closed
// form; the independent check for the Koopman coefficient.
double koopman_integral(const GroupElement& g);

}  // namespace oracle

#pragma once

// Direct-sum (Pythagorean) representation engine: a pair (A, B) with
// A*A + B*B = 1 decorates the leaves of a tree with operator words and
// matrix coefficients are leafwise inner products. Inner products are
// linear in the first argument.

#include "thompson/element.hpp"
#include "thompson/matrix.hpp"

#include <complex>
#include <string>
#include <vector>

namespace thompson {

inline constexpr double kDefaultConstructionTol = 1e-10;

// true iff ||A*A + B*B - I||_max <= tau.
bool pyth_check(const ComplexMatrix& A, const ComplexMatrix& B,
                double tau = kDefaultConstructionTol);
bool pyth_check_exact(const RationalMatrix& A, const RationalMatrix& B);

template <typename Scalar>
struct PythRepT {
    int dim;
    Matrix<Scalar> A, B;
};

struct PythRep : PythRepT<std::complex<double>> {
    // Enforces the Pythagorean identity at construction.
    PythRep(ComplexMatrix a, ComplexMatrix b, double tau = kDefaultConstructionTol);
};

struct PythRepExact : PythRepT<GaussianRational> {
    PythRepExact(RationalMatrix a, RationalMatrix b);
};

// Operator word of each leaf, outermost operator first: the branching
// nearest the leaf is applied last ("AB" means A applied to B applied to
// the root vector). Left edges contribute A, right edges B.
std::vector<std::string> leaf_words(const Tree& s);

template <typename Scalar>
std::vector<std::vector<Scalar>> decorate_direct_sum(const Tree& s, const PythRepT<Scalar>& rep,
                                                     const std::vector<Scalar>& xi);

// Pair-level coefficient (works on unreduced pairs; engines reduce first).
template <typename Scalar>
Scalar coeff_direct_sum_pair(const Tree& t, const Perm& perm, const Tree& s,
                             const PythRepT<Scalar>& rep, const std::vector<Scalar>& xi);

std::complex<double> coeff_direct_sum(const GroupElement& g, const PythRep& rep,
                                      const std::vector<std::complex<double>>& xi);
GaussianRational coeff_direct_sum(const GroupElement& g, const PythRepExact& rep,
                                  const std::vector<GaussianRational>& xi);

// Formal inner-product sum, e.g. "⟨Aξ,AAξ⟩+⟨ABξ,BAξ⟩+⟨BBξ,Bξ⟩" for x0.
std::string symbolic_direct_sum(const GroupElement& g);

// dim 1, A = B = 1/sqrt(2), xi = 1; equals the sum of sqrt(|I_s||I_t|)
// over matched leaves.
double koopman_coeff(const GroupElement& g);

// dim 1, A = v, B = w with |v|^2 + |w|^2 = 1 (checked within tau).
std::complex<double> deformed_coeff(const GroupElement& g, std::complex<double> v,
                                    std::complex<double> w,
                                    double tau = kDefaultConstructionTol);

}  // namespace thompson

#pragma once

// Tensor-functor representation engine: an isometry R: H -> H⊗H applied at
// every branching decorates a tree with a sparse vector over leaf-indexed
// tuples. Finite bases come from a (d²×d) isometry matrix; countable bases
// from a map sending a basis index to a finite sum of weighted index pairs.

#include "thompson/element.hpp"
#include "thompson/matrix.hpp"

#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace thompson {

struct growth_error : domain_error {
    using domain_error::domain_error;
};

inline constexpr std::size_t kDefaultMaxSupport = 1'000'000;

// Finite map from index tuples to amplitudes; no zero entries stored.
class SparseVector {
public:
    using Key = std::vector<int>;
    using Map = std::map<Key, std::complex<double>>;

    SparseVector() = default;
    static SparseVector delta(int index, std::complex<double> amp = 1.0) {
        SparseVector v;
        v.add({index}, amp);
        return v;
    }

    void add(const Key& key, std::complex<double> amp);
    const Map& entries() const { return entries_; }
    std::size_t support() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int factors() const { return entries_.empty() ? 0 : static_cast<int>(entries_.begin()->first.size()); }

    double norm() const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    Map entries_;
};

// Inner product, linear in the first argument.
std::complex<double> inner(const SparseVector& x, const SparseVector& y);

struct ExpandTerm {
    int left, right;
    std::complex<double> amp;
};

class TensorRep {
public:
    // Finite basis: R is a (d²×d) matrix, row (i,j) = i*d + j, column = x.
    // The isometry condition R*R = I is checked within tau.
    static TensorRep finite(const ComplexMatrix& R, int d, double tau = 1e-10);

    // Countable basis: expand(x) lists the weighted index pairs of R δ_x.
    static TensorRep countable(std::function<std::vector<ExpandTerm>(int)> expand);

    // R δ_n = δ_{n+1} ⊗ δ_{n+1} on l²(N).
    static TensorRep regular();

    // R x = (u x) ⊗ ζ with u = rotation(theta) on C², ζ = e_0.
    static TensorRep rotation(double theta);

    bool finite_basis() const { return dim_ >= 0; }
    int dim() const { return dim_; }
    std::vector<ExpandTerm> expand(int x) const { return expand_(x); }

private:
    TensorRep(int dim, std::function<std::vector<ExpandTerm>(int)> expand)
        : dim_(dim), expand_(std::move(expand)) {}

    int dim_;  // -1 = countable
    std::function<std::vector<ExpandTerm>(int)> expand_;
};

// Φ(s) ξ over the leaf-tuple basis; refuses to grow past max_support.
SparseVector decorate_tensor(const Tree& s, const TensorRep& rep, const SparseVector& xi,
                             std::size_t max_support = kDefaultMaxSupport);

// ⟨σ_π decorate(s, ξ), decorate(t, η)⟩ with σ_π permuting tensor factors
// by the leaf bijection. Pair-level form works on unreduced pairs.
std::complex<double> coeff_tensor_pair(const Tree& t, const Perm& perm, const Tree& s,
                                       const TensorRep& rep, const SparseVector& xi,
                                       const SparseVector& eta,
                                       std::size_t max_support = kDefaultMaxSupport);
std::complex<double> coeff_tensor(const GroupElement& g, const TensorRep& rep,
                                  const SparseVector& xi, const SparseVector& eta,
                                  std::size_t max_support = kDefaultMaxSupport);

// Countable-basis rep with ξ = η = δ_0; 1 exactly when g is the identity.
double regular_coeff(const GroupElement& g);

// ⟨π(g) ζ, ζ⟩ for R x = u x ⊗ ζ, u = rotation(theta).
std::complex<double> rotation_coeff(const GroupElement& g, double theta);

struct AlmostInvariantStep {
    double theta;
    TensorRep rep;
    SparseVector zeta;
    double diagnostic;  // sup over the generating set of |coeff - 1|
};

// Family R_k x = u_k x ⊗ ζ with u_k = rotation(theta_k); the diagnostic is
// evaluated over the given generating set.
std::vector<AlmostInvariantStep> almost_invariant_sequence(
    const std::vector<double>& thetas, const std::vector<GroupElement>& generating_set);

}  // namespace thompson

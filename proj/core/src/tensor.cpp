#include "thompson/tensor.hpp"

#include <cmath>

namespace thompson {

namespace {
constexpr double kAmplitudeEps = 0.0;  // exact zero pruning only
}

void SparseVector::add(const Key& key, std::complex<double> amp) {
    if (!entries_.empty() && key.size() != entries_.begin()->first.size())
        throw domain_error("mixed tuple lengths in sparse vector");
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (amp != std::complex<double>{}) entries_.emplace(key, amp);
        return;
    }
    it->second += amp;
    if (std::abs(it->second) <= kAmplitudeEps) entries_.erase(it);
}

double SparseVector::norm() const {
    double s = 0.0;
    for (const auto& [k, v] : entries_) s += std::norm(v);
    return std::sqrt(s);
}

std::complex<double> inner(const SparseVector& x, const SparseVector& y) {
    if (x.empty() || y.empty()) return 0.0;
    std::complex<double> total = 0.0;
    for (const auto& [key, amp] : x.entries()) {
        auto it = y.entries().find(key);
        if (it != y.entries().end()) total += amp * std::conj(it->second);
    }
    return total;
}

TensorRep TensorRep::finite(const ComplexMatrix& R, int d, double tau) {
    if (R.rows() != d * d || R.cols() != d)
        throw domain_error("tensor isometry must be a (d*d) x d matrix");
    ComplexMatrix prod = R.adjoint() * R;
    if (max_abs_diff(prod, ComplexMatrix::identity(d)) > tau)
        throw domain_error("R*R = 1 fails within tolerance");
    ComplexMatrix copy = R;
    return TensorRep(d, [copy, d](int x) {
        if (x < 0 || x >= d) throw domain_error("basis index out of range");
        std::vector<ExpandTerm> out;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::complex<double> a = copy(i * d + j, x);
                if (a != std::complex<double>{}) out.push_back({i, j, a});
            }
        return out;
    });
}

TensorRep TensorRep::countable(std::function<std::vector<ExpandTerm>(int)> expand) {
    return TensorRep(-1, std::move(expand));
}

TensorRep TensorRep::regular() {
    return countable([](int n) {
        return std::vector<ExpandTerm>{{n + 1, n + 1, 1.0}};
    });
}

TensorRep TensorRep::rotation(double theta) {
    ComplexMatrix R(4, 2);
    // u e0 = (cos, sin), u e1 = (-sin, cos); R x = (u x) ⊗ e0.
    R(0, 0) = std::cos(theta);
    R(2, 0) = std::sin(theta);
    R(0, 1) = -std::sin(theta);
    R(2, 1) = std::cos(theta);
    return finite(R, 2);
}

namespace {

// decorate(subtree) of a single basis vector, memoized per (subtree, index).
struct Decorator {
    const TensorRep& rep;
    std::size_t max_support;
    std::map<std::pair<std::string, int>, SparseVector> memo;

    const SparseVector& of_delta(const Tree& t, int x) {
        auto key = std::make_pair(t.shape(), x);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        SparseVector out;
        if (t.is_leaf()) {
            out = SparseVector::delta(x);
        } else {
            Tree l = t.left(), r = t.right();
            for (const ExpandTerm& term : rep.expand(x)) {
                const SparseVector& lv = of_delta(l, term.left);
                const SparseVector& rv = of_delta(r, term.right);
                for (const auto& [lk, la] : lv.entries())
                    for (const auto& [rk, ra] : rv.entries()) {
                        SparseVector::Key key2 = lk;
                        key2.insert(key2.end(), rk.begin(), rk.end());
                        out.add(key2, term.amp * la * ra);
                        if (out.support() > max_support)
                            throw growth_error("sparse support bound exceeded (" +
                                               std::to_string(max_support) + " terms)");
                    }
            }
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    }
};

}  // namespace

SparseVector decorate_tensor(const Tree& s, const TensorRep& rep, const SparseVector& xi,
                             std::size_t max_support) {
    if (xi.empty()) return SparseVector{};
    if (xi.factors() != 1) throw domain_error("root vector must be over single indices");
    Decorator dec{rep, max_support, {}};
    SparseVector out;
    for (const auto& [key, amp] : xi.entries()) {
        const SparseVector& d = dec.of_delta(s, key[0]);
        for (const auto& [k, a] : d.entries()) {
            out.add(k, amp * a);
            if (out.support() > max_support)
                throw growth_error("sparse support bound exceeded (" +
                                   std::to_string(max_support) + " terms)");
        }
    }
    return out;
}

std::complex<double> coeff_tensor_pair(const Tree& t, const Perm& perm, const Tree& s,
                                       const TensorRep& rep, const SparseVector& xi,
                                       const SparseVector& eta, std::size_t max_support) {
    SparseVector ds = decorate_tensor(s, rep, xi, max_support);
    SparseVector dt = decorate_tensor(t, rep, eta, max_support);
    // σ_π places s-factor i at position perm(i).
    std::complex<double> total = 0.0;
    for (const auto& [key, amp] : ds.entries()) {
        SparseVector::Key permuted(key.size());
        for (std::size_t i = 0; i < key.size(); ++i)
            permuted[static_cast<std::size_t>(perm[i])] = key[i];
        auto it = dt.entries().find(permuted);
        if (it != dt.entries().end()) total += amp * std::conj(it->second);
    }
    return total;
}

std::complex<double> coeff_tensor(const GroupElement& g, const TensorRep& rep,
                                  const SparseVector& xi, const SparseVector& eta,
                                  std::size_t max_support) {
    return coeff_tensor_pair(g.top(), g.perm(), g.bottom(), rep, xi, eta, max_support);
}

double regular_coeff(const GroupElement& g) {
    if (g.flavor() != Flavor::F)
        throw domain_error("regular coefficient is defined for flavor F");
    return coeff_tensor(g, TensorRep::regular(), SparseVector::delta(0), SparseVector::delta(0))
        .real();
}

std::complex<double> rotation_coeff(const GroupElement& g, double theta) {
    SparseVector zeta = SparseVector::delta(0);
    return coeff_tensor(g, TensorRep::rotation(theta), zeta, zeta);
}

std::vector<AlmostInvariantStep> almost_invariant_sequence(
    const std::vector<double>& thetas, const std::vector<GroupElement>& generating_set) {
    std::vector<AlmostInvariantStep> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        TensorRep rep = TensorRep::rotation(theta);
        SparseVector zeta = SparseVector::delta(0);
        double diag = 0.0;
        for (const GroupElement& g : generating_set)
            diag = std::max(diag, std::abs(coeff_tensor(g, rep, zeta, zeta) - 1.0));
        out.push_back({theta, std::move(rep), std::move(zeta), diag});
    }
    return out;
}

}  // namespace thompson

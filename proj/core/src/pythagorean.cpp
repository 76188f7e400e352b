#include "thompson/pythagorean.hpp"

#include <algorithm>
#include <cmath>

namespace thompson {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw domain_error("matrix dimension mismatch");
    double m = 0.0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

bool pyth_check(const ComplexMatrix& A, const ComplexMatrix& B, double tau) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw domain_error("Pythagorean pair must be square matrices of equal dimension");
    ComplexMatrix sum = A.adjoint() * A + B.adjoint() * B;
    return max_abs_diff(sum, ComplexMatrix::identity(A.rows())) <= tau;
}

bool pyth_check_exact(const RationalMatrix& A, const RationalMatrix& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw domain_error("Pythagorean pair must be square matrices of equal dimension");
    return A.adjoint() * A + B.adjoint() * B == RationalMatrix::identity(A.rows());
}

PythRep::PythRep(ComplexMatrix a, ComplexMatrix b, double tau) {
    if (!pyth_check(a, b, tau))
        throw domain_error("A*A + B*B = 1 fails within tolerance");
    dim = a.rows();
    A = std::move(a);
    B = std::move(b);
}

PythRepExact::PythRepExact(RationalMatrix a, RationalMatrix b) {
    if (!pyth_check_exact(a, b)) throw domain_error("A*A + B*B = 1 fails exactly");
    dim = a.rows();
    A = std::move(a);
    B = std::move(b);
}

std::vector<std::string> leaf_words(const Tree& s) {
    std::vector<std::string> out;
    for (const std::string& path : s.leaf_paths()) {
        std::string word;
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            word.push_back(*it == '0' ? 'A' : 'B');
        out.push_back(word);
    }
    return out;
}

template <typename Scalar>
std::vector<std::vector<Scalar>> decorate_direct_sum(const Tree& s, const PythRepT<Scalar>& rep,
                                                     const std::vector<Scalar>& xi) {
    if (static_cast<int>(xi.size()) != rep.dim)
        throw domain_error("vector dimension does not match representation");
    std::vector<std::vector<Scalar>> out;
    out.reserve(static_cast<std::size_t>(s.leaf_count()));
    for (const std::string& path : s.leaf_paths()) {
        std::vector<Scalar> v = xi;
        for (char c : path) v = (c == '0' ? rep.A : rep.B).apply(v);
        out.push_back(std::move(v));
    }
    return out;
}

template std::vector<std::vector<std::complex<double>>> decorate_direct_sum(
    const Tree&, const PythRepT<std::complex<double>>&, const std::vector<std::complex<double>>&);
template std::vector<std::vector<GaussianRational>> decorate_direct_sum(
    const Tree&, const PythRepT<GaussianRational>&, const std::vector<GaussianRational>&);

template <typename Scalar>
Scalar coeff_direct_sum_pair(const Tree& t, const Perm& perm, const Tree& s,
                             const PythRepT<Scalar>& rep, const std::vector<Scalar>& xi) {
    auto vs = decorate_direct_sum(s, rep, xi);
    auto vt = decorate_direct_sum(t, rep, xi);
    Scalar total(0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& x = vs[i];
        const auto& y = vt[static_cast<std::size_t>(perm[i])];
        for (std::size_t k = 0; k < x.size(); ++k) total = total + x[k] * conj(y[k]);
    }
    return total;
}

template std::complex<double> coeff_direct_sum_pair(const Tree&, const Perm&, const Tree&,
                                                    const PythRepT<std::complex<double>>&,
                                                    const std::vector<std::complex<double>>&);
template GaussianRational coeff_direct_sum_pair(const Tree&, const Perm&, const Tree&,
                                                const PythRepT<GaussianRational>&,
                                                const std::vector<GaussianRational>&);

std::complex<double> coeff_direct_sum(const GroupElement& g, const PythRep& rep,
                                      const std::vector<std::complex<double>>& xi) {
    return coeff_direct_sum_pair(g.top(), g.perm(), g.bottom(), rep, xi);
}

GaussianRational coeff_direct_sum(const GroupElement& g, const PythRepExact& rep,
                                  const std::vector<GaussianRational>& xi) {
    return coeff_direct_sum_pair(g.top(), g.perm(), g.bottom(), rep, xi);
}

std::string symbolic_direct_sum(const GroupElement& g) {
    auto ws = leaf_words(g.bottom());
    auto wt = leaf_words(g.top());
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += "+";
        out += "⟨" + ws[i] + "ξ," +
               wt[static_cast<std::size_t>(g.perm()[i])] + "ξ⟩";
    }
    return out;
}

double koopman_coeff(const GroupElement& g) {
    auto ds = g.bottom().depths();
    auto dt = g.top().depths();
    double total = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        int e = ds[i] + dt[static_cast<std::size_t>(g.perm()[i])];
        total += std::pow(2.0, -0.5 * e);
    }
    return total;
}

std::complex<double> deformed_coeff(const GroupElement& g, std::complex<double> v,
                                    std::complex<double> w, double tau) {
    if (std::abs(std::norm(v) + std::norm(w) - 1.0) > tau)
        throw domain_error("|v|^2 + |w|^2 = 1 fails within tolerance");
    auto ps = g.bottom().leaf_paths();
    auto pt = g.top().leaf_paths();
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::complex<double> term = 1.0;
        for (char c : ps[i]) term *= (c == '0' ? v : w);
        for (char c : pt[static_cast<std::size_t>(g.perm()[i])])
            term *= std::conj(c == '0' ? v : w);
        total += term;
    }
    return total;
}

}  // namespace thompson

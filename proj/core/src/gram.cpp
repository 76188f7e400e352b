#include "thompson/gram.hpp"

#include <Eigen/Dense>

namespace thompson {

GramResult gram_psd(const CoeffFn& coeff, const std::vector<GroupElement>& elems) {
    const std::size_t n = elems.size();
    if (n == 0) throw domain_error("Gram matrix needs at least one element");
    GramResult out;
    out.matrix.assign(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.matrix[i][j] = coeff(multiply(invert(elems[i]), elems[j]));

    Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = out.matrix[i][j];
    // Hermitize against floating-point asymmetry before the eigensolve.
    Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    out.min_eigenvalue = solver.eigenvalues().minCoeff();
    return out;
}

}  // namespace thompson

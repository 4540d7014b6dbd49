#include "riskregion/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "riskregion/errors.hpp"

namespace riskregion {

Eigen::MatrixXd cholesky(const Eigen::MatrixXd& s) {
    const Eigen::Index n = s.rows();
    if (s.cols() != n) throw std::invalid_argument("cholesky: matrix must be square");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < i; ++j)
            if (std::abs(s(i, j) - s(j, i)) > 1e-10)
                throw std::invalid_argument("cholesky: matrix is not symmetric");

    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        double d = s(k, k);
        for (Eigen::Index j = 0; j < k; ++j) d -= l(k, j) * l(k, j);
        if (d <= 0.0)
            throw not_positive_definite_error(
                "matrix is not positive definite (pivot " + std::to_string(k + 1) + ")",
                static_cast<std::size_t>(k + 1));
        l(k, k) = std::sqrt(d);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            double v = s(i, k);
            for (Eigen::Index j = 0; j < k; ++j) v -= l(i, j) * l(k, j);
            l(i, k) = v / l(k, k);
        }
    }
    return l;
}

Eigen::VectorXd cholesky_solve(const Eigen::MatrixXd& chol_lower, const Eigen::VectorXd& b) {
    Eigen::VectorXd y =
        chol_lower.triangularView<Eigen::Lower>().solve(b);
    return chol_lower.transpose().triangularView<Eigen::Upper>().solve(y);
}

Eigen::MatrixXd cholesky_inverse(const Eigen::MatrixXd& chol_lower) {
    const Eigen::Index n = chol_lower.rows();
    Eigen::MatrixXd inv_l = chol_lower.triangularView<Eigen::Lower>().solve(
        Eigen::MatrixXd::Identity(n, n));
    Eigen::MatrixXd inv = inv_l.transpose() * inv_l;
    // symmetrize against rounding
    return 0.5 * (inv + inv.transpose());
}

}  // namespace riskregion

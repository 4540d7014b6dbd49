#pragma once

#include <Eigen/Dense>

namespace riskregion {

// Lower-triangular Cholesky factor L with L*L^T = s. The input must be square
// and symmetric within 1e-10. A non-positive pivot throws
// not_positive_definite_error carrying the 1-based pivot index.
Eigen::MatrixXd cholesky(const Eigen::MatrixXd& s);

// Solve (L*L^T) x = b given the factor from cholesky().
Eigen::VectorXd cholesky_solve(const Eigen::MatrixXd& chol_lower, const Eigen::VectorXd& b);

// (L*L^T)^{-1} given the factor from cholesky().
Eigen::MatrixXd cholesky_inverse(const Eigen::MatrixXd& chol_lower);

}  // namespace riskregion

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "riskregion/design.hpp"

namespace riskregion {

// Maximum likelihood fit of the grouped-binomial logistic model.
struct FitResult {
    Eigen::VectorXd pi_hat;         // coefficients, in term order
    Eigen::MatrixXd covariance;     // inverse observed information at pi_hat
    double log_likelihood = 0.0;    // kernel: sum(e*eta - n*log(1+exp(eta)))
    int iterations = 0;             // Newton updates taken
    bool converged = false;
    double score_max_abs = 0.0;     // max |score component| at pi_hat
    std::vector<std::string> parameter_names;
};

// Optional per-iteration trace for diagnostics and tests.
struct FitTrace {
    std::vector<double> log_likelihoods;  // after each accepted step
};

// Grouped-binomial log-likelihood kernel at `pi`.
double log_likelihood(const DesignMatrix& dm, const Eigen::VectorXd& pi);

// X^T W X with w_i = n_i p_i (1 - p_i), p_i = expit(x_i . pi).
Eigen::MatrixXd observed_information(const DesignMatrix& dm, const Eigen::VectorXd& pi);

// Newton/IRLS from pi = 0 with step-halving. Converged when
// max|score| < 1e-8 and max|step| < 1e-10 within 50 iterations.
// Throws singular_design_error, separation_error, or non_convergence_error.
FitResult fit_logistic(const DesignMatrix& dm, FitTrace* trace = nullptr);

}  // namespace riskregion

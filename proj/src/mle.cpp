#include "riskregion/mle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "riskregion/errors.hpp"
#include "riskregion/linalg.hpp"
#include "riskregion/measures.hpp"

namespace riskregion {

namespace {

constexpr int kMaxIterations = 50;
constexpr int kMaxHalvings = 10;
constexpr double kScoreTol = 1e-8;
constexpr double kStepTol = 1e-10;
// expit saturates past +-15 at double precision; beyond this the MLE is
// treated as nonexistent (separation).
constexpr double kSeparationBound = 15.0;

// log(1 + exp(t)) without overflow
double softplus(double t) {
    return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

Eigen::VectorXd fitted_probs(const DesignMatrix& dm, const Eigen::VectorXd& pi) {
    Eigen::VectorXd eta = dm.rows * pi;
    for (Eigen::Index i = 0; i < eta.size(); ++i) eta[i] = expit(eta[i]);
    return eta;
}

}  // namespace

double log_likelihood(const DesignMatrix& dm, const Eigen::VectorXd& pi) {
    const Eigen::VectorXd eta = dm.rows * pi;
    double ll = 0.0;
    for (Eigen::Index i = 0; i < eta.size(); ++i)
        ll += dm.events[i] * eta[i] - dm.trials[i] * softplus(eta[i]);
    return ll;
}

Eigen::MatrixXd observed_information(const DesignMatrix& dm, const Eigen::VectorXd& pi) {
    if (dm.rows.cols() != pi.size())
        throw std::invalid_argument("observed_information: dimension mismatch");
    const Eigen::VectorXd p = fitted_probs(dm, pi);
    const Eigen::VectorXd w =
        dm.trials.array() * p.array() * (1.0 - p.array());
    return dm.rows.transpose() * w.asDiagonal() * dm.rows;
}

FitResult fit_logistic(const DesignMatrix& dm, FitTrace* trace) {
    const Eigen::Index n = dm.rows.rows();
    const Eigen::Index m = dm.rows.cols();
    if (n == 0 || m == 0) throw singular_design_error("empty design matrix");

    const double total_events = dm.events.sum();
    const double total_trials = dm.trials.sum();
    if (total_events <= 0.0 || total_events >= total_trials)
        throw separation_error(
            "every outcome is identical; the MLE does not exist (separation)");

    Eigen::VectorXd pi = Eigen::VectorXd::Zero(m);
    double ll = log_likelihood(dm, pi);
    if (trace) trace->log_likelihoods.push_back(ll);

    for (int iter = 0; iter <= kMaxIterations; ++iter) {
        const Eigen::VectorXd p = fitted_probs(dm, pi);
        const Eigen::VectorXd score =
            dm.rows.transpose() * (dm.events - dm.trials.cwiseProduct(p));
        const Eigen::VectorXd w = dm.trials.array() * p.array() * (1.0 - p.array());
        const Eigen::MatrixXd info = dm.rows.transpose() * w.asDiagonal() * dm.rows;

        Eigen::MatrixXd chol;
        try {
            chol = cholesky(info);
        } catch (const not_positive_definite_error& e) {
            if (iter == 0)
                throw singular_design_error(std::string("design matrix is rank deficient: ") +
                                            e.what());
            if (pi.cwiseAbs().maxCoeff() > kSeparationBound)
                throw separation_error(
                    "information matrix lost positive definiteness with diverging "
                    "coefficients (separation)");
            throw singular_design_error(std::string("information matrix is singular: ") +
                                        e.what());
        }
        Eigen::VectorXd step = cholesky_solve(chol, score);

        if (score.cwiseAbs().maxCoeff() < kScoreTol && step.cwiseAbs().maxCoeff() < kStepTol) {
            FitResult fit;
            fit.pi_hat = pi;
            fit.covariance = cholesky_inverse(chol);
            fit.log_likelihood = ll;
            fit.iterations = iter;
            fit.converged = true;
            fit.score_max_abs = score.cwiseAbs().maxCoeff();
            fit.parameter_names = dm.column_names;
            return fit;
        }
        if (iter == kMaxIterations) break;

        // Newton step with halving so the log-likelihood never decreases
        Eigen::VectorXd candidate = pi + step;
        double candidate_ll = log_likelihood(dm, candidate);
        for (int h = 0; h < kMaxHalvings && candidate_ll < ll; ++h) {
            step *= 0.5;
            candidate = pi + step;
            candidate_ll = log_likelihood(dm, candidate);
        }
        pi = candidate;
        ll = candidate_ll;
        if (trace) trace->log_likelihoods.push_back(ll);
    }

    if (pi.cwiseAbs().maxCoeff() > kSeparationBound)
        throw separation_error("coefficients diverged beyond " +
                               std::to_string(kSeparationBound) +
                               "; the MLE does not exist (separation)");
    throw non_convergence_error(
        "IRLS did not converge within " + std::to_string(kMaxIterations) + " iterations",
        std::vector<double>(pi.data(), pi.data() + pi.size()));
}

}  // namespace riskregion

#pragma once

// Shared fixtures for the test suites: the bundled example dataset, the
// published reference estimates for it, and deterministic random-data
// generators built on the library's own RandomSource.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "riskregion/dataset.hpp"
#include "riskregion/design.hpp"
#include "riskregion/measures.hpp"
#include "riskregion/mle.hpp"
#include "riskregion/sampler.hpp"

namespace testutil {

using namespace riskregion;

inline std::string data_path(const std::string& name) {
    return std::string(RISKREGION_DATA_DIR) + "/" + name;
}

inline GroupedDataset example_dataset() { return load_dataset(data_path("table1.csv")); }

inline const char* kExampleFormula = "z + x1 + x2 + x3 + x4 + z:x2 + z:x3";

// Published reference coefficients and covariance for the bundled dataset
// (reported to two decimals in the source publication).
inline Eigen::VectorXd reference_estimates() {
    Eigen::VectorXd pi(8);
    pi << 1.19, -0.87, -0.57, -1.82, 0.10, 0.55, 1.96, 2.18;
    return pi;
}

inline Eigen::MatrixXd reference_covariance() {
    Eigen::MatrixXd s(8, 8);
    s << 0.64, -0.53, -0.12, -0.42, -0.32, -0.13, 0.47, 0.29,
        -0.53, 1.06, -0.14, 0.45, 0.31, 0.10, -0.89, -0.67,
        -0.12, -0.14, 0.37, -0.04, 0.00, -0.05, 0.03, 0.05,
        -0.42, 0.45, -0.04, 0.69, 0.05, -0.01, -0.69, -0.05,
        -0.32, 0.31, 0.00, 0.05, 0.72, 0.06, -0.07, -0.71,
        -0.13, 0.10, -0.05, -0.01, 0.06, 0.39, -0.10, -0.04,
        0.47, -0.89, 0.03, -0.69, -0.07, -0.10, 1.40, 0.32,
        0.29, -0.67, 0.05, -0.05, -0.71, -0.04, 0.32, 1.86;
    return s;
}

// FitResult carrying the reference values, for exercising the simulation
// pipeline from known inputs.
inline FitResult reference_fit() {
    FitResult fit;
    fit.pi_hat = reference_estimates();
    fit.covariance = reference_covariance();
    fit.converged = true;
    fit.iterations = 0;
    fit.parameter_names = {"(intercept)", "z", "x1", "x2", "x3", "x4", "z:x2", "z:x3"};
    return fit;
}

inline int random_int(RandomSource& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline long random_binomial(RandomSource& rng, long n, double p) {
    long events = 0;
    for (long i = 0; i < n; ++i)
        if (rng.next_double() < p) ++events;
    return events;
}

struct RandomProblem {
    GroupedDataset dataset;
    std::string formula_text;
};

// Grouped dataset over all strata of k in {1,2,3} binary covariates with
// moderate cell sizes and a random true coefficient vector, so the MLE
// exists with overwhelming probability. Regenerates on the rare degenerate
// outcome (a constant outcome column).
inline RandomProblem random_problem(RandomSource& rng) {
    for (;;) {
        const int k = random_int(rng, 1, 3);
        std::vector<std::string> names;
        std::string formula = "z";
        for (int j = 0; j < k; ++j) {
            names.push_back("x" + std::to_string(j + 1));
            formula += " + x" + std::to_string(j + 1);
        }
        const bool with_interaction = k >= 1 && rng.next_double() < 0.5;
        if (with_interaction) formula += " + z:x1";

        const int n_terms = 2 + k + (with_interaction ? 1 : 0);
        Eigen::VectorXd truth(n_terms);
        for (int t = 0; t < n_terms; ++t) truth[t] = 2.4 * rng.next_double() - 1.2;

        GroupedDataset ds;
        ds.covariate_names = names;
        for (int pattern = 0; pattern < (1 << k); ++pattern) {
            StratumKey stratum(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) stratum[static_cast<std::size_t>(j)] = (pattern >> j) & 1;
            for (int z = 1; z >= 0; --z) {
                const long trials = random_int(rng, 20, 60);
                double eta = truth[0] + z * truth[1];
                for (int j = 0; j < k; ++j) eta += stratum[static_cast<std::size_t>(j)] * truth[2 + j];
                if (with_interaction) eta += z * stratum[0] * truth[n_terms - 1];
                const long events = random_binomial(rng, trials, expit(eta));
                ds.cells.push_back({stratum, z, events, trials});
            }
        }
        if (ds.total_events() == 0 || ds.total_events() == ds.total_trials()) continue;
        return {ds, formula};
    }
}

}  // namespace testutil

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "riskregion/dataset.hpp"

namespace riskregion {

enum class TermKind { intercept, treatment, covariate, interaction };

// One column of the model: intercept, z, x_j, or z*x_j.
struct Term {
    TermKind kind = TermKind::intercept;
    std::size_t covariate = 0;  // index into covariate names (covariate/interaction only)
};

// Ordered term list; term order fixes the parameter order of the fit.
struct ModelFormula {
    std::vector<Term> terms;
    std::vector<std::string> covariate_names;  // dataset header names the terms refer to

    std::size_t n_terms() const { return terms.size(); }
};

// Numeric design matrix: one row per dataset cell, one column per term,
// plus the per-row (events, trials) responses.
struct DesignMatrix {
    Eigen::MatrixXd rows;
    Eigen::VectorXd events;
    Eigen::VectorXd trials;
    std::vector<std::string> column_names;
};

// Grammar: `z [+ name ...] [+ z:name ...]`, `+`-separated, intercept implicit.
// The treatment term must come first; interactions must name a covariate that
// also appears as a main effect.
ModelFormula parse_formula(const std::string& text,
                           const std::vector<std::string>& covariate_names);

// Canonical text form (without the implicit intercept); parse_formula of the
// result reproduces the formula.
std::string format_formula(const ModelFormula& formula);

// Single design row for treatment z and stratum x under the formula.
Eigen::RowVectorXd design_row(const ModelFormula& formula, int z, const StratumKey& stratum);

// Design matrix for every cell of the dataset, rows in cell order.
DesignMatrix build_design(const GroupedDataset& ds, const ModelFormula& formula);

}  // namespace riskregion

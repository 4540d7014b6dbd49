#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>

#include "riskregion/dataset.hpp"
#include "riskregion/design.hpp"

namespace riskregion {

// Standardized risks under control (r0) and treatment (r1), both in (0, 1).
struct RiskPair {
    double r0 = 0.0;
    double r1 = 0.0;
};

// The six (baseline, effect) measures derived from one RiskPair.
// `or` is a C++ alternative token, hence `or_`.
struct MeasureSet {
    double r0 = 0.0;
    double r1 = 0.0;
    double o0 = 0.0;   // baseline odds r0/(1-r0)
    double or_ = 0.0;  // odds ratio o1/o0
    double rd = 0.0;   // risk difference r1-r0
    double rr = 0.0;   // risk ratio r1/r0
    double af = 0.0;   // attributable fraction 1-1/rr
};

// Reporting order for the six measures.
inline constexpr std::array<const char*, 6> kMeasureNames = {"r0", "o0", "or", "rd", "rr", "af"};

double measure_component(const MeasureSet& m, std::size_t index);

double expit(double t);

// Clamp a risk into [1e-12, 1-1e-12] so log/odds transforms stay finite.
double clamp_risk(double r);

// expit(row . pi): conditional risk for the cell the row encodes.
double conditional_risk(const Eigen::VectorXd& pi, const Eigen::RowVectorXd& row);

// sum_x expit(row(z,x) . pi) * w(x); weights must sum to 1.
double standardized_risk(const Eigen::VectorXd& pi, int z, const StrataWeights& weights,
                         const ModelFormula& formula);

// All six measures from one RiskPair. af is computed as 1 - 1/rr so the
// AF-RR identity holds exactly.
MeasureSet measures_from_risks(const RiskPair& risks);

// r0 = o0/(1+o0), r1 = o0*or/(1+o0*or). Arguments must be positive and finite.
RiskPair risks_from_odds(double o0, double or_);

}  // namespace riskregion

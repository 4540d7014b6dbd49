#include "riskregion/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "riskregion/errors.hpp"

namespace riskregion {

namespace {
constexpr double kRiskEps = 1e-12;
}

double measure_component(const MeasureSet& m, std::size_t index) {
    switch (index) {
        case 0: return m.r0;
        case 1: return m.o0;
        case 2: return m.or_;
        case 3: return m.rd;
        case 4: return m.rr;
        case 5: return m.af;
        default: throw std::out_of_range("measure_component: index must be < 6");
    }
}

double expit(double t) {
    if (t >= 0.0) {
        const double e = std::exp(-t);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(t);
    return e / (1.0 + e);
}

double clamp_risk(double r) {
    if (r < kRiskEps) return kRiskEps;
    if (r > 1.0 - kRiskEps) return 1.0 - kRiskEps;
    return r;
}

double conditional_risk(const Eigen::VectorXd& pi, const Eigen::RowVectorXd& row) {
    if (pi.size() != row.size())
        throw std::invalid_argument("conditional_risk: dimension mismatch");
    return expit(row.dot(pi.transpose()));
}

double standardized_risk(const Eigen::VectorXd& pi, int z, const StrataWeights& weights,
                         const ModelFormula& formula) {
    double risk = 0.0;
    for (const auto& [stratum, weight] : weights.entries)
        risk += expit(design_row(formula, z, stratum).dot(pi.transpose())) * weight;
    return clamp_risk(risk);
}

MeasureSet measures_from_risks(const RiskPair& risks) {
    const double r0 = risks.r0;
    const double r1 = risks.r1;
    if (!(r0 > 0.0 && r0 < 1.0 && r1 > 0.0 && r1 < 1.0))
        throw std::invalid_argument("measures_from_risks: risks must lie strictly in (0, 1)");
    MeasureSet m;
    m.r0 = r0;
    m.r1 = r1;
    m.o0 = r0 / (1.0 - r0);
    const double o1 = r1 / (1.0 - r1);
    m.or_ = o1 / m.o0;
    m.rd = r1 - r0;
    m.rr = r1 / r0;
    m.af = 1.0 - 1.0 / m.rr;
    return m;
}

RiskPair risks_from_odds(double o0, double or_) {
    if (!(o0 > 0.0) || !std::isfinite(o0) || !(or_ > 0.0) || !std::isfinite(or_))
        throw std::domain_error("risks_from_odds: odds must be positive and finite");
    RiskPair rp;
    rp.r0 = clamp_risk(o0 / (1.0 + o0));
    const double o1 = o0 * or_;
    rp.r1 = clamp_risk(std::isinf(o1) ? 1.0 : o1 / (1.0 + o1));
    return rp;
}

}  // namespace riskregion

#include "riskregion/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riskregion/errors.hpp"
#include "riskregion/linalg.hpp"
#include "riskregion/sampler.hpp"

namespace riskregion {

std::string plane_name(MeasurePlane plane) {
    switch (plane) {
        case MeasurePlane::log_o0_log_or: return "log-or";
        case MeasurePlane::o0_or: return "or";
        case MeasurePlane::r0_rd: return "rd";
        case MeasurePlane::r0_rr: return "rr";
        case MeasurePlane::r0_af: return "af";
    }
    throw std::logic_error("plane_name: unknown plane");
}

MeasurePlane plane_from_name(const std::string& name) {
    if (name == "log-or") return MeasurePlane::log_o0_log_or;
    if (name == "or") return MeasurePlane::o0_or;
    if (name == "rd") return MeasurePlane::r0_rd;
    if (name == "rr") return MeasurePlane::r0_rr;
    if (name == "af") return MeasurePlane::r0_af;
    throw std::invalid_argument("unknown measure plane '" + name +
                                "' (expected or, rd, rr, af, or log-or)");
}

std::pair<std::string, std::string> plane_axes(MeasurePlane plane) {
    switch (plane) {
        case MeasurePlane::log_o0_log_or: return {"log O0", "log OR"};
        case MeasurePlane::o0_or: return {"O0", "OR"};
        case MeasurePlane::r0_rd: return {"R0", "RD"};
        case MeasurePlane::r0_rr: return {"R0", "RR"};
        case MeasurePlane::r0_af: return {"R0", "AF"};
    }
    throw std::logic_error("plane_axes: unknown plane");
}

MeasureSet point_measures(const FitResult& fit, const StrataWeights& weights,
                          const ModelFormula& formula) {
    RiskPair rp;
    rp.r0 = standardized_risk(fit.pi_hat, 0, weights, formula);
    rp.r1 = standardized_risk(fit.pi_hat, 1, weights, formula);
    return measures_from_risks(rp);
}

MeasureDraws simulate_measures(const FitResult& fit, const StrataWeights& weights,
                               const ModelFormula& formula, int n_draws, std::uint64_t seed) {
    if (!fit.converged)
        throw std::invalid_argument("simulate_measures: fit did not converge");
    if (n_draws < 1) throw std::invalid_argument("simulate_measures: n_draws must be >= 1");

    // An all-zero covariance is the degenerate point-mass case.
    Eigen::MatrixXd chol_lower;
    if (fit.covariance.isZero(0.0))
        chol_lower = Eigen::MatrixXd::Zero(fit.covariance.rows(), fit.covariance.cols());
    else
        chol_lower = cholesky(fit.covariance);

    RandomSource rng(seed);
    const ParameterDraws pd = sample_mvn(fit.pi_hat, chol_lower, rng, n_draws);

    MeasureDraws out;
    out.seed = seed;
    out.n_draws = n_draws;
    out.rows.reserve(static_cast<std::size_t>(n_draws));
    for (int r = 0; r < n_draws; ++r) {
        const Eigen::VectorXd p = pd.draws.row(r).transpose();
        RiskPair rp;
        rp.r0 = standardized_risk(p, 0, weights, formula);
        rp.r1 = standardized_risk(p, 1, weights, formula);
        out.rows.push_back(measures_from_risks(rp));
    }
    return out;
}

double chi2_quantile_df2(double p) {
    if (!(p >= 0.0) || p >= 1.0)
        throw std::domain_error("chi2_quantile_df2: p must lie in [0, 1)");
    return -2.0 * std::log1p(-p);
}

Ellipse log_odds_ellipse(const MeasureDraws& draws, double level) {
    const std::size_t n = draws.rows.size();
    if (n < 10) throw std::invalid_argument("log_odds_ellipse: need at least 10 draws");
    if (!(level > 0.0 && level < 1.0))
        throw std::domain_error("log_odds_ellipse: level must lie in (0, 1)");

    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (const auto& row : draws.rows) {
        mean[0] += std::log(row.o0);
        mean[1] += std::log(row.or_);
    }
    mean /= static_cast<double>(n);

    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const auto& row : draws.rows) {
        const Eigen::Vector2d d(std::log(row.o0) - mean[0], std::log(row.or_) - mean[1]);
        cov += d * d.transpose();
    }
    cov /= static_cast<double>(n - 1);

    if (cov.determinant() <= 1e-14)
        throw degenerate_region_error("log-odds draw covariance is degenerate");

    Ellipse e;
    e.center = mean;
    e.covariance = cov;
    e.level = level;
    e.radius_sq = chi2_quantile_df2(level);
    return e;
}

RegionPolyline ellipse_boundary(const Ellipse& ellipse, int n_points) {
    if (n_points < 4) throw std::invalid_argument("ellipse_boundary: need at least 4 points");
    const Eigen::Matrix2d chol_lower = cholesky(ellipse.covariance);
    const double radius = std::sqrt(ellipse.radius_sq);

    RegionPolyline poly;
    poly.plane = MeasurePlane::log_o0_log_or;
    poly.level = ellipse.level;
    poly.points.reserve(static_cast<std::size_t>(n_points) + 1);
    for (int i = 0; i < n_points; ++i) {
        const double t = 2.0 * std::numbers::pi * i / n_points;
        const Eigen::Vector2d unit(std::cos(t), std::sin(t));
        poly.points.emplace_back(ellipse.center + radius * (chol_lower * unit));
    }
    poly.points.push_back(poly.points.front());
    return poly;
}

Eigen::Vector2d map_point(const Eigen::Vector2d& log_point, MeasurePlane target) {
    if (target == MeasurePlane::log_o0_log_or) return log_point;
    const double o0 = std::exp(log_point[0]);
    const double or_ = std::exp(log_point[1]);
    if (target == MeasurePlane::o0_or) return {o0, or_};
    const RiskPair rp = risks_from_odds(o0, or_);
    switch (target) {
        case MeasurePlane::r0_rd: return {rp.r0, rp.r1 - rp.r0};
        case MeasurePlane::r0_rr: return {rp.r0, rp.r1 / rp.r0};
        case MeasurePlane::r0_af: return {rp.r0, 1.0 - rp.r0 / rp.r1};
        default: throw std::logic_error("map_point: unknown plane");
    }
}

Eigen::Vector2d log_odds_from_plane(const Eigen::Vector2d& point, MeasurePlane source) {
    if (source == MeasurePlane::log_o0_log_or) return point;
    if (source == MeasurePlane::o0_or)
        return {std::log(point[0]), std::log(point[1])};
    const double r0 = point[0];
    double r1 = 0.0;
    switch (source) {
        case MeasurePlane::r0_rd: r1 = r0 + point[1]; break;
        case MeasurePlane::r0_rr: r1 = r0 * point[1]; break;
        case MeasurePlane::r0_af: r1 = r0 / (1.0 - point[1]); break;
        default: throw std::logic_error("log_odds_from_plane: unknown plane");
    }
    const double o0 = r0 / (1.0 - r0);
    const double o1 = r1 / (1.0 - r1);
    return {std::log(o0), std::log(o1 / o0)};
}

RegionPolyline map_region(const RegionPolyline& log_polyline, MeasurePlane target) {
    if (log_polyline.plane != MeasurePlane::log_o0_log_or)
        throw std::invalid_argument("map_region: source polyline must be in the log-odds plane");
    RegionPolyline out;
    out.plane = target;
    out.level = log_polyline.level;
    out.points.reserve(log_polyline.points.size());
    for (const auto& pt : log_polyline.points) out.points.push_back(map_point(pt, target));
    return out;
}

Eigen::Vector2d plane_coords(const MeasureSet& m, MeasurePlane plane) {
    switch (plane) {
        case MeasurePlane::log_o0_log_or: return {std::log(m.o0), std::log(m.or_)};
        case MeasurePlane::o0_or: return {m.o0, m.or_};
        case MeasurePlane::r0_rd: return {m.r0, m.rd};
        case MeasurePlane::r0_rr: return {m.r0, m.rr};
        case MeasurePlane::r0_af: return {m.r0, m.af};
    }
    throw std::logic_error("plane_coords: unknown plane");
}

double quantile_linear(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile_linear: empty sample");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("quantile_linear: p must lie in [0, 1]");
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    // h = (n-1)p + 1 in 1-based order statistics
    const double pos = static_cast<double>(n - 1) * p;
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

IntervalReport quantile_intervals(const MeasureDraws& draws, std::vector<double> levels,
                                  const MeasureSet& point) {
    if (draws.rows.size() < 100)
        throw std::invalid_argument("quantile_intervals: need at least 100 draws");
    for (double level : levels)
        if (!(level > 0.0 && level < 1.0))
            throw std::domain_error("quantile_intervals: levels must lie in (0, 1)");
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    IntervalReport report;
    report.point = point;
    report.levels = levels;
    report.seed = draws.seed;
    report.n_draws = draws.n_draws;

    std::vector<double> column(draws.rows.size());
    for (std::size_t m = 0; m < kMeasureNames.size(); ++m) {
        for (std::size_t i = 0; i < draws.rows.size(); ++i)
            column[i] = measure_component(draws.rows[i], m);
        std::sort(column.begin(), column.end());
        for (double level : levels) {
            const double tail = (1.0 - level) / 2.0;
            report.bounds[m].push_back(
                {quantile_linear(column, tail), quantile_linear(column, 1.0 - tail)});
        }
    }
    return report;
}

}  // namespace riskregion

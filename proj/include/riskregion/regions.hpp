#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "riskregion/measures.hpp"
#include "riskregion/mle.hpp"

namespace riskregion {

// Per-draw measure sets from simulated parameter vectors.
struct MeasureDraws {
    std::vector<MeasureSet> rows;
    std::uint64_t seed = 0;
    int n_draws = 0;
};

// Confidence ellipse of (log O0, log OR): boundary satisfies
// (v - center)^T covariance^{-1} (v - center) = radius_sq.
struct Ellipse {
    Eigen::Vector2d center;
    Eigen::Matrix2d covariance;
    double level = 0.0;
    double radius_sq = 0.0;
};

enum class MeasurePlane { log_o0_log_or, o0_or, r0_rd, r0_rr, r0_af };

inline constexpr std::array<MeasurePlane, 5> kAllPlanes = {
    MeasurePlane::o0_or, MeasurePlane::r0_rd, MeasurePlane::r0_rr,
    MeasurePlane::r0_af, MeasurePlane::log_o0_log_or};

// Short token used by the CLI and file names: or, rd, rr, af, log-or.
std::string plane_name(MeasurePlane plane);
MeasurePlane plane_from_name(const std::string& name);
// Axis labels, e.g. ("O0", "OR").
std::pair<std::string, std::string> plane_axes(MeasurePlane plane);

// Ordered closed boundary polyline in a measure plane (first point == last).
struct RegionPolyline {
    MeasurePlane plane = MeasurePlane::log_o0_log_or;
    std::vector<Eigen::Vector2d> points;
    double level = 0.0;
};

struct MeasureInterval {
    double lower = 0.0;
    double upper = 0.0;
};

// Point estimates plus per-level quantile bounds for each measure.
struct IntervalReport {
    MeasureSet point;
    std::vector<double> levels;  // ascending
    std::array<std::vector<MeasureInterval>, 6> bounds;  // [measure][level], kMeasureNames order
    std::uint64_t seed = 0;
    int n_draws = 0;
};

// Measures at the fitted coefficients.
MeasureSet point_measures(const FitResult& fit, const StrataWeights& weights,
                          const ModelFormula& formula);

// Draw p ~ N(pi_hat, covariance) n_draws times and evaluate the measures for
// each draw. Deterministic given the seed. An all-zero covariance yields the
// point-estimate measures in every row.
MeasureDraws simulate_measures(const FitResult& fit, const StrataWeights& weights,
                               const ModelFormula& formula, int n_draws, std::uint64_t seed);

// Exact chi-square quantile for 2 degrees of freedom: -2 ln(1-p), p in [0, 1).
double chi2_quantile_df2(double p);

// Fit the normal-theory ellipse to the (log o0, log or) draw cloud:
// center = sample mean, covariance = sample covariance (n-1 denominator).
Ellipse log_odds_ellipse(const MeasureDraws& draws, double level);

// n_points boundary points center + sqrt(radius_sq) * L (cos t, sin t) at
// uniform angles, closed by repeating the first point. n_points >= 4.
RegionPolyline ellipse_boundary(const Ellipse& ellipse, int n_points = 256);

// Pointwise conversion of a (log O0, log OR) point to the target plane.
Eigen::Vector2d map_point(const Eigen::Vector2d& log_point, MeasurePlane target);

// Inverse of map_point: recover (log O0, log OR) from a point of `source`.
Eigen::Vector2d log_odds_from_plane(const Eigen::Vector2d& point, MeasurePlane source);

// Map a closed (log O0, log OR) polyline pointwise into the target plane.
// The chain is a smooth bijection, so the image of the boundary is the
// boundary of the image region.
RegionPolyline map_region(const RegionPolyline& log_polyline, MeasurePlane target);

// Coordinates of one measure row in a plane (for scatter plots and coverage).
Eigen::Vector2d plane_coords(const MeasureSet& m, MeasurePlane plane);

// Empirical quantile with linear interpolation between order statistics at
// position h = (n-1)p + 1. `sorted` must be ascending.
double quantile_linear(const std::vector<double>& sorted, double p);

// Equal-tailed intervals at each level L: quantiles at (1-L)/2 and 1-(1-L)/2
// of each measure's draw column. Requires n_draws >= 100.
IntervalReport quantile_intervals(const MeasureDraws& draws, std::vector<double> levels,
                                  const MeasureSet& point);

}  // namespace riskregion

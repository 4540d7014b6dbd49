#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "riskregion/regions.hpp"

namespace riskregion {

// One figure per measure plane: draw scatter with the confidence region
// boundaries and point-estimate marker, plus marginal histograms of both
// coordinates. Output is self-contained SVG (no external references).
std::string figure_svg(MeasurePlane plane, const std::vector<Eigen::Vector2d>& scatter,
                       const std::vector<RegionPolyline>& regions,
                       const Eigen::Vector2d& point_estimate);

}  // namespace riskregion

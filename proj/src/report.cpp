#include "riskregion/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "riskregion/version.hpp"

namespace riskregion {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_level_pct(double level) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", level * 100.0);
    return buf;
}

nlohmann::json tool_json() {
    return {{"name", kToolName}, {"version", kToolVersion}};
}

nlohmann::json run_json(const RunInfo& info) {
    return {{"data", info.data_path},
            {"formula", info.formula},
            {"seed", info.seed},
            {"draws", info.n_draws}};
}

nlohmann::json measures_json(const IntervalReport& report) {
    nlohmann::json measures = nlohmann::json::array();
    for (std::size_t m = 0; m < kMeasureNames.size(); ++m) {
        nlohmann::json intervals = nlohmann::json::array();
        for (std::size_t l = 0; l < report.levels.size(); ++l)
            intervals.push_back({{"level", report.levels[l]},
                                 {"lower", report.bounds[m][l].lower},
                                 {"upper", report.bounds[m][l].upper}});
        measures.push_back({{"name", kMeasureNames[m]},
                            {"estimate", measure_component(report.point, m)},
                            {"intervals", intervals}});
    }
    return measures;
}

}  // namespace

nlohmann::json fit_report_json(const FitResult& fit, const GroupedDataset& ds,
                               const RunInfo& info) {
    nlohmann::json covariance = nlohmann::json::array();
    for (Eigen::Index i = 0; i < fit.covariance.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < fit.covariance.cols(); ++j)
            row.push_back(fit.covariance(i, j));
        covariance.push_back(row);
    }
    return {{"tool", tool_json()},
            {"data",
             {{"path", info.data_path},
              {"cells", ds.cells.size()},
              {"trials", ds.total_trials()},
              {"events", ds.total_events()},
              {"covariates", ds.covariate_names}}},
            {"formula", info.formula},
            {"parameters", fit.parameter_names},
            {"estimates",
             std::vector<double>(fit.pi_hat.data(), fit.pi_hat.data() + fit.pi_hat.size())},
            {"covariance", covariance},
            {"log_likelihood", fit.log_likelihood},  // kernel, up to an additive data constant
            {"iterations", fit.iterations},
            {"converged", fit.converged},
            {"score_max_abs", fit.score_max_abs}};
}

std::string fit_report_csv(const FitResult& fit) {
    std::string out = "parameter,estimate";
    for (const auto& name : fit.parameter_names) out += ",cov_" + name;
    out += "\n";
    for (Eigen::Index i = 0; i < fit.pi_hat.size(); ++i) {
        out += fit.parameter_names[static_cast<std::size_t>(i)] + "," + fmt(fit.pi_hat[i]);
        for (Eigen::Index j = 0; j < fit.covariance.cols(); ++j)
            out += "," + fmt(fit.covariance(i, j));
        out += "\n";
    }
    return out;
}

nlohmann::json interval_report_json(const IntervalReport& report, const RunInfo& info) {
    return {{"tool", tool_json()},
            {"run", run_json(info)},
            {"levels", report.levels},
            {"measures", measures_json(report)}};
}

std::string interval_report_csv(const IntervalReport& report) {
    // Table-shaped grid: lower bounds for descending levels, then upper bounds
    // for ascending levels, e.g. measure,estimate,lower_95,lower_50,upper_50,upper_95.
    std::string out = "measure,estimate";
    for (auto it = report.levels.rbegin(); it != report.levels.rend(); ++it)
        out += ",lower_" + fmt_level_pct(*it);
    for (double level : report.levels) out += ",upper_" + fmt_level_pct(level);
    out += "\n";
    for (std::size_t m = 0; m < kMeasureNames.size(); ++m) {
        out += std::string(kMeasureNames[m]) + "," + fmt(measure_component(report.point, m));
        for (std::size_t l = report.levels.size(); l-- > 0;)
            out += "," + fmt(report.bounds[m][l].lower);
        for (std::size_t l = 0; l < report.levels.size(); ++l)
            out += "," + fmt(report.bounds[m][l].upper);
        out += "\n";
    }
    return out;
}

nlohmann::json regions_json(const std::vector<std::vector<RegionPolyline>>& regions_by_plane,
                            const MeasureSet& point, const RunInfo& info) {
    nlohmann::json planes = nlohmann::json::array();
    for (const auto& regions : regions_by_plane) {
        if (regions.empty()) continue;
        const MeasurePlane plane = regions.front().plane;
        const auto [xlabel, ylabel] = plane_axes(plane);
        const Eigen::Vector2d pt = plane_coords(point, plane);
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& poly : regions) {
            nlohmann::json points = nlohmann::json::array();
            for (const auto& p : poly.points) points.push_back({p[0], p[1]});
            levels.push_back({{"level", poly.level}, {"points", points}});
        }
        planes.push_back({{"plane", plane_name(plane)},
                          {"x", xlabel},
                          {"y", ylabel},
                          {"point", {pt[0], pt[1]}},
                          {"regions", levels}});
    }
    return {{"tool", tool_json()}, {"run", run_json(info)}, {"planes", planes}};
}

std::string region_csv(const std::vector<RegionPolyline>& regions) {
    std::string out = "level,index,x,y\n";
    for (const auto& poly : regions)
        for (std::size_t i = 0; i < poly.points.size(); ++i)
            out += fmt(poly.level) + "," + std::to_string(i) + "," + fmt(poly.points[i][0]) +
                   "," + fmt(poly.points[i][1]) + "\n";
    return out;
}

nlohmann::json bootstrap_report_json(const BootstrapDraws& draws, const IntervalReport& report,
                                     const RunInfo& info) {
    return {{"tool", tool_json()},
            {"run", run_json(info)},
            {"n_boot", draws.n_boot},
            {"failures", draws.failures},
            {"levels", report.levels},
            {"measures", measures_json(report)}};
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace riskregion

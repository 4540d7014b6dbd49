#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskregion/dataset.hpp"
#include "riskregion/mle.hpp"
#include "riskregion/oracle.hpp"
#include "riskregion/regions.hpp"

namespace riskregion {

// Provenance embedded in every JSON report; sufficient to reproduce a run.
struct RunInfo {
    std::string data_path;
    std::string formula;
    std::uint64_t seed = 0;
    int n_draws = 0;
};

nlohmann::json fit_report_json(const FitResult& fit, const GroupedDataset& ds,
                               const RunInfo& info);
std::string fit_report_csv(const FitResult& fit);

nlohmann::json interval_report_json(const IntervalReport& report, const RunInfo& info);
// Table-shaped grid: one row per measure; lower bounds for descending levels,
// then upper bounds for ascending levels (e.g. l95, l50, u50, u95).
std::string interval_report_csv(const IntervalReport& report);

// All planes with their per-level boundary polylines and the point estimate.
nlohmann::json regions_json(const std::vector<std::vector<RegionPolyline>>& regions_by_plane,
                            const MeasureSet& point, const RunInfo& info);
std::string region_csv(const std::vector<RegionPolyline>& regions);

nlohmann::json bootstrap_report_json(const BootstrapDraws& draws, const IntervalReport& report,
                                     const RunInfo& info);

// Write via a temp file + rename so readers never observe partial content.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace riskregion

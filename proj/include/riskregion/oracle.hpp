#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "riskregion/dataset.hpp"
#include "riskregion/design.hpp"
#include "riskregion/measures.hpp"

namespace riskregion {

// Case-resampling bootstrap of the whole estimation pipeline; used as an
// independent check on the simulation-based intervals.
struct BootstrapDraws {
    std::vector<MeasureSet> rows;  // one per successful resample
    int n_boot = 0;
    std::uint64_t seed = 0;
    int failures = 0;  // resamples where the refit errored
};

// One (cell index, outcome) pair per patient, cells in dataset order,
// y = 1 patients first within each cell.
std::vector<std::pair<std::size_t, int>> expand_individuals(const GroupedDataset& ds);

// Group individuals (as produced by expand_individuals, possibly resampled)
// back into a dataset with the same covariate names.
GroupedDataset regroup(const GroupedDataset& base,
                       const std::vector<std::pair<std::size_t, int>>& individuals);

// Draw N individuals with replacement, regroup, refit, and record the measures
// at the refit coefficients with the resample's own covariate distribution.
// Resamples causing separation or rank loss are counted as failures and
// skipped; more than 50% failures throws oracle_error.
BootstrapDraws bootstrap_measures(const GroupedDataset& ds, const ModelFormula& formula,
                                  int n_boot, std::uint64_t seed);

}  // namespace riskregion

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace riskregion {

// Covariate pattern of one stratum: ordered binary indicators (x1, ..., xk).
using StratumKey = std::vector<std::uint8_t>;

// Event/trial counts for one (stratum, treatment) cell.
struct CellCount {
    StratumKey stratum;
    int treatment = 0;  // z in {0, 1}
    long events = 0;    // count of y = 1
    long trials = 0;
};

// Grouped binary-outcome data. Cells are unique per (stratum, treatment);
// parse_dataset() aggregates duplicates and stores cells in canonical order
// (stratum lexicographic ascending, z descending).
struct GroupedDataset {
    std::vector<std::string> covariate_names;
    std::vector<CellCount> cells;

    std::size_t n_covariates() const { return covariate_names.size(); }
    long total_trials() const;
    long total_events() const;
};

// Proportion of the pooled sample (both arms) falling in each observed stratum.
struct StrataWeights {
    std::map<StratumKey, double> entries;
};

// Parse a CSV document with header `x1,...,xk,z,events,trials`.
// Duplicate (stratum, z) rows are aggregated by summing events and trials;
// strata present in only one arm are retained.
GroupedDataset parse_dataset(const std::string& csv_text);

// Read and parse a CSV file; errors carry the path.
GroupedDataset load_dataset(const std::string& path);

// Deterministic serializer: rows sorted by (stratum lexicographic, z descending),
// LF line endings. parse(serialize(ds)) is the identity.
std::string serialize_dataset(const GroupedDataset& ds);

// weight(x) = (trials in stratum x, both arms) / total trials.
StrataWeights covariate_distribution(const GroupedDataset& ds);

}  // namespace riskregion

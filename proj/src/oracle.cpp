#include "riskregion/oracle.hpp"

#include <map>
#include <tuple>

#include "riskregion/errors.hpp"
#include "riskregion/mle.hpp"
#include "riskregion/regions.hpp"
#include "riskregion/sampler.hpp"

namespace riskregion {

std::vector<std::pair<std::size_t, int>> expand_individuals(const GroupedDataset& ds) {
    std::vector<std::pair<std::size_t, int>> individuals;
    individuals.reserve(static_cast<std::size_t>(ds.total_trials()));
    for (std::size_t ci = 0; ci < ds.cells.size(); ++ci) {
        const CellCount& cell = ds.cells[ci];
        for (long i = 0; i < cell.events; ++i) individuals.emplace_back(ci, 1);
        for (long i = 0; i < cell.trials - cell.events; ++i) individuals.emplace_back(ci, 0);
    }
    return individuals;
}

GroupedDataset regroup(const GroupedDataset& base,
                       const std::vector<std::pair<std::size_t, int>>& individuals) {
    std::map<std::pair<StratumKey, int>, std::pair<long, long>> agg;
    for (const auto& [cell_index, outcome] : individuals) {
        const CellCount& cell = base.cells[cell_index];
        auto& counts = agg[{cell.stratum, cell.treatment}];
        counts.first += outcome;
        counts.second += 1;
    }
    GroupedDataset out;
    out.covariate_names = base.covariate_names;
    for (const auto& [key, counts] : agg)
        out.cells.push_back({key.first, key.second, counts.first, counts.second});
    // map iteration is stratum-ascending; restore canonical z-descending order
    std::sort(out.cells.begin(), out.cells.end(), [](const CellCount& a, const CellCount& b) {
        return std::tie(a.stratum, b.treatment) < std::tie(b.stratum, a.treatment);
    });
    return out;
}

BootstrapDraws bootstrap_measures(const GroupedDataset& ds, const ModelFormula& formula,
                                  int n_boot, std::uint64_t seed) {
    if (n_boot < 1) throw std::invalid_argument("bootstrap_measures: n_boot must be >= 1");

    // the original data must fit before resampling is meaningful
    fit_logistic(build_design(ds, formula));

    const auto individuals = expand_individuals(ds);
    const std::size_t n = individuals.size();
    const RandomSource root(seed);

    BootstrapDraws out;
    out.n_boot = n_boot;
    out.seed = seed;

    std::vector<std::pair<std::size_t, int>> resample(n);
    for (int b = 0; b < n_boot; ++b) {
        RandomSource rng = root.split(static_cast<std::uint64_t>(b));
        for (std::size_t i = 0; i < n; ++i)
            resample[i] = individuals[rng.next_u64() % n];
        const GroupedDataset rds = regroup(ds, resample);
        try {
            const FitResult fit = fit_logistic(build_design(rds, formula));
            out.rows.push_back(point_measures(fit, covariate_distribution(rds), formula));
        } catch (const fit_error&) {
            ++out.failures;
        } catch (const not_positive_definite_error&) {
            ++out.failures;
        }
    }
    if (2 * out.failures > n_boot)
        throw oracle_error("bootstrap oracle unusable: " + std::to_string(out.failures) +
                           " of " + std::to_string(n_boot) + " resamples failed to fit");
    return out;
}

}  // namespace riskregion

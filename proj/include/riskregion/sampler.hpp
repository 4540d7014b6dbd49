#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "riskregion/linalg.hpp"

namespace riskregion {

// Deterministic seedable random source: xoshiro256++ state seeded via
// splitmix64 expansion of the 64-bit seed. Identical seeds produce identical
// draw sequences. Single-owner: not shareable between concurrent tasks;
// derive independent sub-sources with split().
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double next_double();

    // Standard normal via the Marsaglia polar method (pairs; spare cached).
    double next_normal();

    // Independent stream for block `index`; the parent stream is not advanced.
    RandomSource split(std::uint64_t index) const;

private:
    std::array<std::uint64_t, 4> state_;
    std::uint64_t seed_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Simulated parameter vectors, one row per draw, columns in parameter order.
struct ParameterDraws {
    Eigen::MatrixXd draws;
    std::uint64_t seed = 0;
};

// rows r = mean + L z_r with z_r i.i.d. standard normal, coordinates drawn
// in order within each row.
ParameterDraws sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& chol_lower,
                          RandomSource& rng, int n_draws);

}  // namespace riskregion

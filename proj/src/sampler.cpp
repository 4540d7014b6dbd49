#include "riskregion/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace riskregion {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += kGolden;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t RandomSource::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

RandomSource RandomSource::split(std::uint64_t index) const {
    std::uint64_t x = seed_ ^ ((index + 1) * kGolden);
    return RandomSource(splitmix64(x));
}

ParameterDraws sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& chol_lower,
                          RandomSource& rng, int n_draws) {
    const Eigen::Index dim = mean.size();
    if (chol_lower.rows() != dim || chol_lower.cols() != dim)
        throw std::invalid_argument("sample_mvn: dimension mismatch");
    if (n_draws < 1) throw std::invalid_argument("sample_mvn: n_draws must be >= 1");

    ParameterDraws out;
    out.seed = rng.seed();
    out.draws.resize(n_draws, dim);
    Eigen::VectorXd zvec(dim);
    for (int r = 0; r < n_draws; ++r) {
        for (Eigen::Index j = 0; j < dim; ++j) zvec[j] = rng.next_normal();
        out.draws.row(r) = (mean + chol_lower * zvec).transpose();
    }
    return out;
}

}  // namespace riskregion

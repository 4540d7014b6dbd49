#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "riskregion/errors.hpp"
#include "riskregion/measures.hpp"

using namespace riskregion;
using testutil::example_dataset;
using testutil::kExampleFormula;

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

TEST_CASE("expit basics") {
    CHECK(expit(0.0) == 0.5);
    CHECK(expit(1.19) == doctest::Approx(0.7667410642).epsilon(1e-9));
    CHECK(expit(2.74) == doctest::Approx(0.9393460967).epsilon(1e-9));
    CHECK(expit(-800.0) >= 0.0);
    CHECK(expit(800.0) <= 1.0);
}

TEST_CASE("conditional risk evaluates the linear predictor") {
    const auto ds = example_dataset();
    const auto f = parse_formula(kExampleFormula, ds.covariate_names);
    const Eigen::VectorXd pi = testutil::reference_estimates();

    CHECK(conditional_risk(Eigen::VectorXd::Zero(8), design_row(f, 1, StratumKey{0, 1, 1, 0})) ==
          0.5);
    // control arm of the all-zero stratum: expit(1.19)
    CHECK(conditional_risk(pi, design_row(f, 0, StratumKey{0, 0, 0, 0})) ==
          doctest::Approx(0.7667410642).epsilon(1e-9));
    // treated arm of stratum (0,1,1,0): expit(1.19 - 0.87 - 1.82 + 0.10 + 1.96 + 2.18)
    CHECK(conditional_risk(pi, design_row(f, 1, StratumKey{0, 1, 1, 0})) ==
          doctest::Approx(0.9393460967).epsilon(1e-9));
}

TEST_CASE("standardized risk at the reference estimates matches the published values") {
    const auto ds = example_dataset();
    const auto f = parse_formula(kExampleFormula, ds.covariate_names);
    const auto w = covariate_distribution(ds);
    const Eigen::VectorXd pi = testutil::reference_estimates();

    const double r0 = standardized_risk(pi, 0, w, f);
    const double r1 = standardized_risk(pi, 1, w, f);
    CHECK(r0 == doctest::Approx(0.5330088226).epsilon(1e-9));  // frozen oracle
    CHECK(std::abs(r0 - 0.53) < 0.005);                        // published value
    CHECK(std::abs((r1 - r0) - 0.17) < 0.005);
}

TEST_CASE("standardized risk collapses to the conditional risk for one stratum") {
    const auto ds = parse_dataset("x1,z,events,trials\n1,1,2,5\n1,0,1,4\n");
    const auto f = parse_formula("z + x1", ds.covariate_names);
    const auto w = covariate_distribution(ds);
    Eigen::VectorXd pi(3);
    pi << 0.4, -0.3, 0.8;
    CHECK(standardized_risk(pi, 1, w, f) ==
          doctest::Approx(conditional_risk(pi, design_row(f, 1, StratumKey{1}))).epsilon(1e-15));
}

TEST_CASE("standardized risk stays within the conditional risk range") {
    RandomSource rng(808);
    const auto ds = example_dataset();
    const auto f = parse_formula(kExampleFormula, ds.covariate_names);
    const auto w = covariate_distribution(ds);
    for (int rep = 0; rep < 50; ++rep) {
        Eigen::VectorXd pi(8);
        for (int j = 0; j < 8; ++j) pi[j] = 4.0 * rng.next_double() - 2.0;
        for (int z : {0, 1}) {
            double lo = 1.0, hi = 0.0;
            for (const auto& [stratum, weight] : w.entries) {
                const double p = conditional_risk(pi, design_row(f, z, stratum));
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
            const double r = standardized_risk(pi, z, w, f);
            CHECK(r >= lo - 1e-12);
            CHECK(r <= hi + 1e-12);
        }
    }
}

TEST_CASE("null risks give null measures") {
    const MeasureSet m = measures_from_risks({0.5, 0.5});
    CHECK(m.o0 == 1.0);
    CHECK(m.or_ == 1.0);
    CHECK(m.rd == 0.0);
    CHECK(m.rr == 1.0);
    CHECK(m.af == 0.0);
}

TEST_CASE("measures from risks evaluate the defining formulas") {
    const MeasureSet m = measures_from_risks({0.2, 0.4});
    CHECK(m.o0 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(m.or_ == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(m.rd == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(m.rr == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m.af == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measures at the reference estimates match the published values") {
    const auto ds = example_dataset();
    const auto f = parse_formula(kExampleFormula, ds.covariate_names);
    const auto w = covariate_distribution(ds);
    const Eigen::VectorXd pi = testutil::reference_estimates();
    const MeasureSet m = measures_from_risks(
        {standardized_risk(pi, 0, w, f), standardized_risk(pi, 1, w, f)});

    CHECK(std::abs(m.r0 - 0.53) < 0.005);
    CHECK(std::abs(m.or_ - 2.11) < 0.005);
    CHECK(std::abs(m.rd - 0.17) < 0.005);
    CHECK(std::abs(m.rr - 1.33) < 0.005);
    CHECK(std::abs(m.af - 0.25) < 0.005);
    // the inputs carry two decimals, which the odds transform amplifies
    // (dO0/dR0 ~ 4.6 near R0 = 0.53), hence the wider margin here
    CHECK(std::abs(m.o0 - 1.13) < 0.015);
}

TEST_CASE("risks from odds invert the odds transform") {
    const RiskPair unit = risks_from_odds(1.0, 1.0);
    CHECK(unit.r0 == 0.5);
    CHECK(unit.r1 == 0.5);

    const RiskPair rp = risks_from_odds(0.25, 8.0 / 3.0);
    CHECK(rp.r0 == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(rp.r1 == doctest::Approx(0.4).epsilon(1e-12));

    const RiskPair pub = risks_from_odds(1.13, 2.11);
    CHECK(pub.r0 == doctest::Approx(0.5305164319).epsilon(1e-9));
    CHECK(pub.r1 == doctest::Approx(0.7045179210).epsilon(1e-9));
}

TEST_CASE("risks_from_odds rejects bad domains") {
    CHECK_THROWS_AS(risks_from_odds(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(risks_from_odds(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(risks_from_odds(std::nan(""), 1.0), std::domain_error);
    CHECK_THROWS_AS(risks_from_odds(1.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("measure round trip and sign coherence over random risk pairs") {
    RandomSource rng(909);
    for (int rep = 0; rep < 10000; ++rep) {
        RiskPair rp;
        rp.r0 = 0.001 + 0.998 * rng.next_double();
        rp.r1 = 0.001 + 0.998 * rng.next_double();
        const MeasureSet m = measures_from_risks(rp);

        // risks -> (o0, or) -> risks
        const RiskPair back = risks_from_odds(m.o0, m.or_);
        CHECK(std::abs(back.r0 - rp.r0) < 1e-12);
        CHECK(std::abs(back.r1 - rp.r1) < 1e-12);

        // (o0, or) -> risks -> measures recovers the odds
        const MeasureSet m2 = measures_from_risks(back);
        CHECK(std::abs(m2.o0 - m.o0) < 1e-12 * std::max(1.0, m.o0));
        CHECK(std::abs(m2.or_ - m.or_) < 1e-12 * std::max(1.0, m.or_));

        // af = 1 - 1/rr holds exactly by construction
        CHECK(m.af == 1.0 - 1.0 / m.rr);

        // sgn(RD) = sgn(log OR) = sgn(log RR) = sgn(AF)
        if (std::abs(m.rd) > 1e-14) {
            const int s = sgn(m.rd);
            CHECK(sgn(std::log(m.or_)) == s);
            CHECK(sgn(std::log(m.rr)) == s);
            CHECK(sgn(m.af) == s);
        }
    }
}

TEST_CASE("expit is monotone in coordinates with positive design entries") {
    const auto ds = example_dataset();
    const auto f = parse_formula(kExampleFormula, ds.covariate_names);
    const Eigen::RowVectorXd row = design_row(f, 1, StratumKey{1, 1, 0, 1});
    RandomSource rng(111);
    for (int rep = 0; rep < 100; ++rep) {
        Eigen::VectorXd pi(8);
        for (int j = 0; j < 8; ++j) pi[j] = 2.0 * rng.next_double() - 1.0;
        const double base = conditional_risk(pi, row);
        for (int j = 0; j < 8; ++j) {
            if (row[j] <= 0.0) continue;
            Eigen::VectorXd bumped = pi;
            bumped[j] += 0.05;
            CHECK(conditional_risk(bumped, row) > base);
        }
    }
}

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "riskregion/errors.hpp"
#include "riskregion/linalg.hpp"
#include "riskregion/sampler.hpp"

using namespace riskregion;

TEST_CASE("cholesky of the identity is the identity") {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
    CHECK(cholesky(id) == id);
}

TEST_CASE("cholesky factors a 2x2 exactly") {
    Eigen::MatrixXd s(2, 2);
    s << 4, 2, 2, 5;
    Eigen::MatrixXd expected(2, 2);
    expected << 2, 0, 1, 2;
    CHECK(cholesky(s) == expected);
}

TEST_CASE("indefinite matrix reports the failing pivot") {
    Eigen::MatrixXd s(2, 2);
    s << 1, 2, 2, 1;
    try {
        cholesky(s);
        FAIL("expected not_positive_definite_error");
    } catch (const not_positive_definite_error& e) {
        CHECK(e.pivot() == 2);
    }
    try {
        cholesky(Eigen::MatrixXd::Zero(2, 2));
        FAIL("expected not_positive_definite_error");
    } catch (const not_positive_definite_error& e) {
        CHECK(e.pivot() == 1);
    }
}

TEST_CASE("asymmetric input is rejected") {
    Eigen::MatrixXd s(2, 2);
    s << 1, 0.5, 0.2, 1;
    CHECK_THROWS_AS(cholesky(s), std::invalid_argument);
}

TEST_CASE("random SPD matrices reconstruct within 1e-10") {
    RandomSource rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = testutil::random_int(rng, 1, 8);
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = 2.0 * rng.next_double() - 1.0;
        const Eigen::MatrixXd s =
            a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd l = cholesky(s);
        CHECK((l * l.transpose() - s).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(l.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().isZero(0.0));
        // the solve and the inverse agree with the factorization
        Eigen::VectorXd b(n);
        for (int i = 0; i < n; ++i) b[i] = rng.next_double();
        CHECK((s * cholesky_solve(l, b) - b).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((s * cholesky_inverse(l) - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <
              1e-9);
    }
}

TEST_CASE("identical seeds give identical streams") {
    RandomSource a(123456789), b(123456789);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    for (int i = 0; i < 1000; ++i) CHECK(a.next_normal() == b.next_normal());

    RandomSource ra(99), rb(99);
    const Eigen::VectorXd mean = Eigen::VectorXd::LinSpaced(4, -1.0, 2.0);
    const Eigen::MatrixXd l = Eigen::MatrixXd::Identity(4, 4);
    const auto da = sample_mvn(mean, l, ra, 64);
    const auto db = sample_mvn(mean, l, rb, 64);
    CHECK(da.draws == db.draws);
}

TEST_CASE("split streams are deterministic and distinct") {
    const RandomSource root(2718);
    RandomSource a = root.split(0);
    RandomSource b = root.split(0);
    RandomSource c = root.split(1);
    CHECK(a.next_u64() == b.next_u64());
    bool any_different = false;
    for (int i = 0; i < 8; ++i) any_different |= (a.next_u64() != c.next_u64());
    CHECK(any_different);
}

TEST_CASE("zero factor collapses every draw to the mean") {
    RandomSource rng(5);
    Eigen::VectorXd mean(3);
    mean << 0.25, -1.5, 3.0;
    const auto draws = sample_mvn(mean, Eigen::MatrixXd::Zero(3, 3), rng, 10);
    for (int r = 0; r < 10; ++r) CHECK(draws.draws.row(r).transpose() == mean);
}

TEST_CASE("affine law holds exactly for a fixed seed") {
    const Eigen::VectorXd mean = testutil::reference_estimates();
    const Eigen::MatrixXd l = cholesky(testutil::reference_covariance());
    RandomSource r1(777), r2(777);
    const auto shifted = sample_mvn(mean, l, r1, 50);
    const auto standard =
        sample_mvn(Eigen::VectorXd::Zero(8), Eigen::MatrixXd::Identity(8, 8), r2, 50);
    for (int r = 0; r < 50; ++r) {
        const Eigen::VectorXd expected = mean + l * standard.draws.row(r).transpose();
        CHECK(shifted.draws.row(r).transpose() == expected);
    }
}

TEST_CASE("standard normal marginals at n = 100000") {
    RandomSource rng(20241);
    const int n = 100000;
    double sum0 = 0, sum1 = 0, sq0 = 0, sq1 = 0;
    for (int i = 0; i < n; ++i) {
        const double a = rng.next_normal();
        const double b = rng.next_normal();
        sum0 += a; sq0 += a * a;
        sum1 += b; sq1 += b * b;
    }
    const double m0 = sum0 / n, m1 = sum1 / n;
    CHECK(std::abs(m0) < 0.02);
    CHECK(std::abs(m1) < 0.02);
    const double v0 = (sq0 - n * m0 * m0) / (n - 1);
    const double v1 = (sq1 - n * m1 * m1) / (n - 1);
    CHECK(v0 > 0.97); CHECK(v0 < 1.03);
    CHECK(v1 > 0.97); CHECK(v1 < 1.03);
}

TEST_CASE("mvn sample moments recover the reference inputs") {
    const Eigen::VectorXd mean = testutil::reference_estimates();
    const Eigen::MatrixXd cov = testutil::reference_covariance();
    RandomSource rng(1848);
    const int n = 100000;
    const auto pd = sample_mvn(mean, cholesky(cov), rng, n);

    const Eigen::VectorXd m = pd.draws.colwise().mean().transpose();
    CHECK((m - mean).cwiseAbs().maxCoeff() < 0.02);

    const Eigen::MatrixXd centered = pd.draws.rowwise() - m.transpose();
    const Eigen::MatrixXd s = centered.transpose() * centered / double(n - 1);
    CHECK((s - cov).cwiseAbs().maxCoeff() < 0.03);
}

TEST_CASE("sample_mvn validates its arguments") {
    RandomSource rng(1);
    CHECK_THROWS_AS(
        sample_mvn(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(3, 3), rng, 10),
        std::invalid_argument);
    CHECK_THROWS_AS(
        sample_mvn(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(2, 2), rng, 0),
        std::invalid_argument);
}

#include "lrpr/metrics.hpp"

#include "lrpr/rng.hpp"

#include <doctest.h>

using namespace lrpr;

namespace {

// brute-force orbit distance over a theta grid, the independent oracle
double phase_dist_grid(const cmat& A, const cmat& B, int n = 10000) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n;
        best = std::min(best, (A - std::polar(1.0, theta) * B).norm());
    }
    return best;
}

cmat random_cmat(Index rows, Index cols, std::uint64_t stream) {
    Rng gen({7, stream});
    return gen.cgaussian_mat(rows, cols);
}

} // namespace

TEST_CASE("phase_dist vanishes on the orbit") {
    cmat B = random_cmat(3, 4, 1);
    for (double theta : {0.0, 0.9, 2.2, M_PI}) {
        cmat A = std::polar(1.0, theta) * B;
        CHECK(phase_dist(A, B) <= 1e-10);
    }
}

TEST_CASE("phase_dist of antipodal rank-1 pairs") {
    Rng gen({7, 2});
    cvec u = gen.cgaussian_vec(4).normalized();
    cvec v = gen.cgaussian_vec(3).normalized();
    cmat A = u * v.adjoint();
    CHECK(phase_dist(A, cmat(-A)) <= 1e-12);
}

TEST_CASE("phase_dist matches the theta-grid oracle") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        cmat A = random_cmat(3, 3, 10 + s);
        cmat B = random_cmat(3, 3, 20 + s);
        CHECK(phase_dist(A, B) == doctest::Approx(phase_dist_grid(A, B)).epsilon(1e-6));
    }
}

TEST_CASE("real phase_dist equals the signed Frobenius distance") {
    Rng gen({7, 3});
    rmat A = gen.gaussian_mat(3, 3), B = gen.gaussian_mat(3, 3);
    const double ip = (A.cwiseProduct(B)).sum();
    const double direct = (A - (ip >= 0 ? 1.0 : -1.0) * B).norm();
    CHECK(phase_dist(A, B) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("phase_dist pseudometric properties") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        cmat A = random_cmat(3, 3, 30 + s);
        cmat B = random_cmat(3, 3, 40 + s);
        cmat C = random_cmat(3, 3, 50 + s);
        CHECK(phase_dist(A, B) == doctest::Approx(phase_dist(B, A)).epsilon(1e-10));
        CHECK(phase_dist(A, C) <= phase_dist(A, B) + phase_dist(B, C) + 1e-10);
        CHECK(phase_dist(A, B) <= (A - B).norm() + 1e-12);
    }
}

TEST_CASE("sign_dist basics") {
    rmat A(2, 2), B(2, 2);
    A << 1, 0, 0, 0;
    B << 0, 0, 0, 1;
    CHECK(sign_dist(A, A) == doctest::Approx(0.0));
    CHECK(sign_dist(A, rmat(-A)) == doctest::Approx(0.0));
    CHECK(sign_dist(A, B) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("sign_dist rejects complex input") {
    cmat A = cmat::Identity(2, 2);
    cmat B = A;
    B(0, 0) = cplx(0, 1);
    CHECK_THROWS_AS(sign_dist(B, A), invalid_argument);
}

TEST_CASE("vec_sin_angle basics") {
    cvec u(2), v(2);
    u << 1, 0;
    v << 0, 1;
    CHECK(vec_sin_angle(u, cvec(cplx(0.3, -2.0) * u)) == doctest::Approx(0.0));
    CHECK(vec_sin_angle(u, v) == doctest::Approx(1.0));
    rvec a(2), b(2);
    a << 1, 0;
    b << std::cos(0.3), std::sin(0.3);
    CHECK(vec_sin_angle(a, b) == doctest::Approx(std::sin(0.3)).epsilon(1e-12));
    CHECK_THROWS_AS(vec_sin_angle(cvec(cvec::Zero(2)), v), invalid_argument);
}

TEST_CASE("theorem-2 condition checker") {
    rmat I2 = rmat::Identity(2, 2);
    auto chk = check_theorem2(I2, 0.2, 0.7);
    CHECK(chk.kappa == doctest::Approx(1.0));
    CHECK(chk.satisfied);
    CHECK(chk.margin == doctest::Approx(0.45 * 1.8 - 0.2 / 0.3).epsilon(1e-9));

    rmat flat(2, 2);
    flat.setZero();
    flat(0, 0) = 2.8;
    flat(1, 1) = 1.0;
    auto at_boundary = check_theorem2(flat, 0.01, 0.0);
    CHECK_FALSE(at_boundary.satisfied);

    flat(0, 0) = 3.0;
    auto beyond = check_theorem2(flat, 0.01, 0.0);
    CHECK_FALSE(beyond.satisfied);
    CHECK(beyond.margin < 0);

    CHECK_THROWS_AS(check_theorem2(rmat(rmat::Zero(2, 2)), 0.1, 0.5), invalid_argument);
}

TEST_CASE("psd_anchor_error closed form equals the direct computation") {
    CHECK(psd_anchor_error(rmat(rmat::Identity(4, 2)), rmat(rmat::Identity(4, 2)))
          == doctest::Approx(0.0));

    rmat e1 = rmat::Identity(3, 1), e2(3, 1);
    e2 << 0, 1, 0;
    CHECK(psd_anchor_error(e1, e2) == doctest::Approx(std::sqrt(2.0)));

    for (std::uint64_t s = 0; s < 6; ++s) {
        cmat A = random_cmat(6, 2, 60 + s);
        cmat B = random_cmat(6, 2, 70 + s);
        cmat U0 = Eigen::HouseholderQR<cmat>(A).householderQ() * cmat::Identity(6, 2);
        cmat Us = Eigen::HouseholderQR<cmat>(B).householderQ() * cmat::Identity(6, 2);
        const double direct = (U0 * U0.adjoint() - Us * Us.adjoint()).norm();
        CHECK(psd_anchor_error(U0, Us) == doctest::Approx(direct).epsilon(1e-10));
    }

    CHECK_THROWS_AS(psd_anchor_error(cmat(random_cmat(4, 2, 80)), cmat(cmat::Identity(4, 2))),
                    invalid_argument);
}

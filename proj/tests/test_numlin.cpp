#include "lrpr/numlin.hpp"

#include "lrpr/rng.hpp"

#include <doctest.h>

using namespace lrpr;

namespace {

cmat random_cmat(Index rows, Index cols, std::uint64_t stream) {
    Rng gen({99, stream});
    return gen.cgaussian_mat(rows, cols);
}

} // namespace

TEST_CASE("svd of identity") {
    auto dec = svd(cmat(cmat::Identity(2, 2)));
    CHECK(dec.sigma(0) == doctest::Approx(1.0));
    CHECK(dec.sigma(1) == doctest::Approx(1.0));
}

TEST_CASE("svd of a rank-1 outer product") {
    Rng gen({3, 1});
    cvec u = gen.cgaussian_vec(5).normalized();
    cvec v = gen.cgaussian_vec(4).normalized();
    auto dec = svd(cmat(u * v.adjoint()));
    CHECK(dec.sigma(0) == doctest::Approx(1.0).epsilon(1e-12));
    for (Index i = 1; i < dec.sigma.size(); ++i) CHECK(dec.sigma(i) < 1e-12);
}

TEST_CASE("svd reconstruction and orthonormality invariants") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const Index rows = 2 + s % 5, cols = 2 + (s * 3) % 5;
        cmat A = random_cmat(rows, cols, s);
        auto dec = svd(A);
        const Index k = std::min(rows, cols);
        CHECK(dec.sigma.size() == k);
        CHECK((dec.U.adjoint() * dec.U - cmat::Identity(k, k)).norm() <= 1e-10 * double(k));
        CHECK((dec.V.adjoint() * dec.V - cmat::Identity(k, k)).norm() <= 1e-10 * double(k));
        CHECK((A - dec.U * dec.sigma.asDiagonal() * dec.V.adjoint()).norm()
              <= 1e-8 * A.norm());
        for (Index i = 0; i + 1 < k; ++i) CHECK(dec.sigma(i) >= dec.sigma(i + 1));
        CHECK(dec.sigma.minCoeff() >= 0);
    }
    // 3x2 case pinned explicitly
    cmat A = random_cmat(3, 2, 77);
    auto dec = svd(A);
    CHECK((A - dec.U * dec.sigma.asDiagonal() * dec.V.adjoint()).norm() <= 1e-10);
}

TEST_CASE("svt zero threshold and full shrinkage") {
    cmat A = random_cmat(4, 3, 5);
    CHECK((svt(A, 0.0) - A).norm() == 0.0);
    const double smax = svd(A).sigma(0);
    CHECK(svt(A, smax + 1e-9).norm() <= 1e-9);
}

TEST_CASE("svt on a diagonal matrix") {
    // independent oracle: diagonal case shrinks each diagonal entry
    rmat A = rmat::Zero(2, 2);
    A(0, 0) = 3;
    A(1, 1) = 1;
    rmat out = svt(A, 2.0);
    CHECK(out(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(out(1, 1)) < 1e-12);
    CHECK(std::abs(out(0, 1)) < 1e-12);
    CHECK(std::abs(out(1, 0)) < 1e-12);
}

TEST_CASE("svt is nonexpansive") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        cmat A = random_cmat(5, 4, 100 + s);
        cmat B = random_cmat(5, 4, 200 + s);
        const double tau = 0.3 * double(s + 1);
        CHECK((svt(A, tau) - svt(B, tau)).norm() <= (A - B).norm() + 1e-12);
    }
}

TEST_CASE("leading eigvecs of a diagonal matrix") {
    rmat A = rvec::LinSpaced(3, 3, 1).asDiagonal();  // diag(3, 2, 1)
    rmat U = leading_eigvecs(A, 1);
    CHECK(U(0, 0) == doctest::Approx(1.0));  // phase fixed: real positive
    CHECK(std::abs(U(1, 0)) < 1e-12);
    CHECK(std::abs(U(2, 0)) < 1e-12);
}

TEST_CASE("leading eigvecs of the identity: residual only") {
    cmat A = cmat::Identity(4, 4);
    cmat U = leading_eigvecs(A, 2);
    for (Index j = 0; j < 2; ++j) {
        const cplx lam = (U.col(j).adjoint() * A * U.col(j))(0);
        CHECK((A * U.col(j) - lam * U.col(j)).norm() <= 1e-10);
    }
    CHECK((U.adjoint() * U - cmat::Identity(2, 2)).norm() <= 1e-10);
}

TEST_CASE("leading eigvec of a rank-1 spike") {
    Rng gen({17, 4});
    cvec u = gen.cgaussian_vec(6).normalized();
    cmat A = u * u.adjoint() + 0.5 * cmat::Identity(6, 6);
    A = ((A + A.adjoint()) / 2.0).eval();
    cmat U = leading_eigvecs(A, 1);
    const double cosang = std::abs(u.dot(U.col(0)));
    CHECK(std::sqrt(std::max(0.0, 1.0 - cosang * cosang)) <= 1e-8);
}

TEST_CASE("leading eigvecs residual property") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        cmat B = random_cmat(6, 6, 300 + s);
        cmat A = ((B + B.adjoint()) / 2.0).eval();
        cmat U = leading_eigvecs(A, 3);
        for (Index j = 0; j < 3; ++j) {
            const cplx lam = (U.col(j).adjoint() * A * U.col(j))(0);
            CHECK((A * U.col(j) - lam * U.col(j)).norm() <= 1e-9 * A.norm());
        }
    }
}

TEST_CASE("leading eigvecs rejects non-Hermitian input") {
    cmat A = random_cmat(4, 4, 9);
    CHECK_THROWS_AS(leading_eigvecs(A, 1), invalid_argument);
}

TEST_CASE("subspace sine basics") {
    rmat U1(2, 1), U2(2, 1);
    U1 << 1, 0;
    U2 << 0, 1;
    CHECK(subspace_sin(U1, U1) == doctest::Approx(0.0));
    CHECK(subspace_sin(U1, U2) == doctest::Approx(1.0));
    const double theta = 0.3;
    rmat U3(2, 1);
    U3 << std::cos(theta), std::sin(theta);
    CHECK(subspace_sin(U1, U3) == doctest::Approx(std::sin(theta)).epsilon(1e-12));
}

TEST_CASE("subspace sine is symmetric for equal dimensions") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        cmat A = random_cmat(7, 2, 400 + s);
        cmat B = random_cmat(7, 2, 500 + s);
        cmat U1 = Eigen::HouseholderQR<cmat>(A).householderQ() * cmat::Identity(7, 2);
        cmat U2 = Eigen::HouseholderQR<cmat>(B).householderQ() * cmat::Identity(7, 2);
        CHECK(subspace_sin(U1, U2) == doctest::Approx(subspace_sin(U2, U1)).epsilon(1e-10));
    }
}

TEST_CASE("subspace sine rejects dimension mismatch") {
    rmat U1 = rmat::Identity(3, 1), U2 = rmat::Identity(4, 1);
    CHECK_THROWS_AS(subspace_sin(U1, U2), invalid_argument);
}

TEST_CASE("dft matrix base cases and unitarity") {
    cmat F1 = dft_matrix(1);
    CHECK(std::abs(F1(0, 0) - cplx(1, 0)) < 1e-15);

    cmat F2 = dft_matrix(2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(F2(0, 0) - cplx(s, 0)) < 1e-15);
    CHECK(std::abs(F2(1, 1) - cplx(-s, 0)) < 1e-15);

    cmat F8 = dft_matrix(8);
    CHECK((F8.adjoint() * F8 - cmat::Identity(8, 8)).norm() <= 1e-12);

    cmat F33 = dft_matrix(33);
    CHECK((F33.adjoint() * F33 - cmat::Identity(33, 33)).norm() <= 1e-10);
}

TEST_CASE("circular convolution identity and shift") {
    Rng gen({11, 3});
    cvec x = gen.cgaussian_vec(6);
    cvec delta = cvec::Zero(6);
    delta[0] = 1;
    CHECK((circular_convolve(x, delta) - x).norm() <= 1e-14);

    cvec e1 = cvec::Zero(4), want = cvec::Zero(4);
    e1[1] = 1;
    want[2] = 1;
    CHECK((circular_convolve(e1, e1) - want).norm() <= 1e-14);
}

TEST_CASE("circular convolution matches the DFT-domain product") {
    Rng gen({12, 5});
    const Index M = 16;
    cvec x = gen.cgaussian_vec(M);
    cvec h = gen.cgaussian_vec(M);
    cmat F = dft_matrix(M);
    cvec lhs = F * circular_convolve(x, h);
    cvec rhs = std::sqrt(double(M)) * cvec((F * x).cwiseProduct(F * h));
    CHECK((lhs - rhs).norm() <= 1e-10);
}

TEST_CASE("circular convolution rejects length mismatch") {
    CHECK_THROWS_AS(circular_convolve(cvec::Zero(3), cvec::Zero(4)), invalid_argument);
}

#pragma once

#include "lrpr/numlin.hpp"
#include "lrpr/types.hpp"

#include <cmath>

// Error measures used throughout: distances modulo the global phase/sign
// ambiguity, principal angles, and the flatness condition checker for the
// rank-r recovery guarantee.

namespace lrpr {

namespace detail {
inline double sqrt_clamped(double radicand) {
    // tiny negative radicands are roundoff
    return radicand <= 0 ? 0.0 : std::sqrt(radicand);
}
} // namespace detail

/// Distance to the phase orbit of B: inf over theta of ||A - e^{i theta} B||_F
/// = sqrt(||A||^2 + ||B||^2 - 2 |<B, A>|).  The minimizing theta is the phase
/// of <B, A>; evaluating the difference there directly avoids the cancellation
/// the closed form suffers near zero distance.
template <typename D1, typename D2>
double phase_dist(const Eigen::MatrixBase<D1>& A, const Eigen::MatrixBase<D2>& B) {
    require(A.rows() == B.rows() && A.cols() == B.cols(), "phase_dist: shape mismatch");
    const cplx ip = (B.template cast<cplx>().conjugate().cwiseProduct(A.template cast<cplx>()))
                        .sum();
    const double mag = std::abs(ip);
    const cplx z = mag > 0 ? ip / mag : cplx(1, 0);
    return (A.template cast<cplx>() - z * B.template cast<cplx>()).norm();
}

/// Real-case metric min(||A - B||_F, ||A + B||_F).
inline double sign_dist(const rmat& A, const rmat& B) {
    require(A.rows() == B.rows() && A.cols() == B.cols(), "sign_dist: shape mismatch");
    return std::min((A - B).norm(), (A + B).norm());
}

inline double sign_dist(const cmat& A, const cmat& B) {
    require(A.imag().cwiseAbs().maxCoeff() == 0.0 && B.imag().cwiseAbs().maxCoeff() == 0.0,
            "sign_dist: complex input (real-case metric)");
    return sign_dist(rmat(A.real()), rmat(B.real()));
}

/// Sine of the angle between two nonzero vectors, invariant to scaling of
/// either by any nonzero complex scalar.
template <typename D1, typename D2>
double vec_sin_angle(const Eigen::MatrixBase<D1>& u, const Eigen::MatrixBase<D2>& v) {
    require(u.size() == v.size(), "vec_sin_angle: length mismatch");
    const double nu = u.norm(), nv = v.norm();
    require(nu > 0 && nv > 0, "vec_sin_angle: zero vector");
    const double c = std::abs((u.conjugate().cwiseProduct(v)).sum()) / (nu * nv);
    return detail::sqrt_clamped(1.0 - c * c);
}

/// Flatness condition delta/(1 - lambda) <= 0.45 (2.8 - kappa) for the
/// rank-r Gaussian recovery guarantee.
struct Theorem2Check {
    double kappa = 0;    // sigma_1 / sigma_r of the target
    double delta = 0;
    double lambda = 0;
    bool satisfied = false;
    double margin = 0;   // RHS - LHS
};

template <typename Derived>
Theorem2Check check_theorem2(const Eigen::MatrixBase<Derived>& Xsharp, double delta,
                             double lambda) {
    require(lambda >= 0 && lambda < 1, "check_theorem2: lambda must be in [0, 1)");
    auto dec = svd(Xsharp);
    const double s1 = dec.sigma.size() ? dec.sigma(0) : 0.0;
    require(s1 > 0, "check_theorem2: zero matrix");
    Index r = 0;
    while (r < dec.sigma.size() && dec.sigma(r) > kRankCutoff * s1) ++r;
    Theorem2Check out;
    out.kappa = s1 / dec.sigma(r - 1);
    out.delta = delta;
    out.lambda = lambda;
    const double lhs = delta / (1.0 - lambda);
    const double rhs = 0.45 * (2.8 - out.kappa);
    out.margin = rhs - lhs;
    out.satisfied = (lhs <= rhs) && (out.kappa < 2.8);
    return out;
}

/// ||U0 U0* - Us Us*||_F via the closed form sqrt(2r - 2 ||U0* Us||_F^2).
template <typename D1, typename D2>
double psd_anchor_error(const Eigen::MatrixBase<D1>& U0, const Eigen::MatrixBase<D2>& Usharp) {
    using Scalar = typename D1::Scalar;
    require(U0.rows() == Usharp.rows() && U0.cols() == Usharp.cols(),
            "psd_anchor_error: shape mismatch");
    auto check_ortho = [](const auto& U, const char* which) {
        Eigen::MatrixX<Scalar> G = U.adjoint() * U;
        G -= Eigen::MatrixX<Scalar>::Identity(U.cols(), U.cols());
        if (G.norm() > kOrthoInputTol * std::max<double>(1.0, std::sqrt(double(U.cols()))))
            throw invalid_argument(std::string("psd_anchor_error: ") + which
                                   + " does not have orthonormal columns");
    };
    check_ortho(U0, "first argument");
    check_ortho(Usharp, "second argument");
    const double r = double(U0.cols());
    const double cross = (U0.adjoint() * Usharp).squaredNorm();
    return detail::sqrt_clamped(2.0 * r - 2.0 * cross);
}

} // namespace lrpr

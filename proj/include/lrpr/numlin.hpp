#pragma once

#include "lrpr/types.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

// Dense linear-algebra kernel: SVD, Hermitian eigendecomposition, singular
// value thresholding, DFT, subspace angles.  Everything here is a pure
// function of its arguments; decompositions are full dense (desk scale),
// which keeps results deterministic.

namespace lrpr {

template <typename Scalar>
struct SvdResult {
    Eigen::MatrixX<Scalar> U;  // d1 x k, orthonormal columns
    rvec sigma;                // length k, nonincreasing, >= 0
    Eigen::MatrixX<Scalar> V;  // d2 x k, orthonormal columns
};

namespace detail {

// Rotate each column so its largest-magnitude entry is real positive
// (ties broken by lowest index).  Makes factor output reproducible.
template <typename Scalar>
void fix_column_phases(Eigen::MatrixX<Scalar>& U, Eigen::MatrixX<Scalar>* coupled = nullptr) {
    for (Index j = 0; j < U.cols(); ++j) {
        Index k = 0;
        double best = -1.0;
        for (Index i = 0; i < U.rows(); ++i) {
            const double m = std::abs(U(i, j));
            if (m > best) {
                best = m;
                k = i;
            }
        }
        if (best <= 0.0) continue;
        const Scalar rot = Eigen::numext::conj(U(k, j)) / Scalar(best);
        U.col(j) *= rot;
        if (coupled) coupled->col(j) *= rot;  // keeps u_j v_j^* invariant
    }
}

} // namespace detail

/// Compact SVD with k = min(d1, d2).  Column phases are normalized (largest
/// entry of each U column real positive, V co-rotated) so repeated calls are
/// reproducible entry-wise on non-degenerate inputs.
template <typename Derived>
SvdResult<typename Derived::Scalar> svd(const Eigen::MatrixBase<Derived>& A) {
    using Scalar = typename Derived::Scalar;
    Eigen::JacobiSVD<Eigen::MatrixX<Scalar>> dec(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw numeric_error("svd failed to converge on a " + std::to_string(A.rows()) + "x"
                            + std::to_string(A.cols()) + " matrix");
    SvdResult<Scalar> out{dec.matrixU(), dec.singularValues(), dec.matrixV()};
    detail::fix_column_phases(out.U, &out.V);
    return out;
}

/// Singular value thresholding: same singular vectors, values max(s - tau, 0).
/// Proximal operator of tau * nuclear norm.
template <typename Derived>
Eigen::MatrixX<typename Derived::Scalar> svt(const Eigen::MatrixBase<Derived>& A, double tau) {
    require(tau >= 0, "svt: tau must be nonnegative");
    if (tau == 0) return A;
    auto dec = svd(A);
    rvec s = (dec.sigma.array() - tau).max(0.0);
    return dec.U * s.asDiagonal() * dec.V.adjoint();
}

/// Orthonormal eigenvectors of a Hermitian matrix for the r algebraically
/// largest eigenvalues, phases normalized.  Rejects inputs that are not
/// Hermitian within kHermitianTol relative.
template <typename Derived>
Eigen::MatrixX<typename Derived::Scalar>
leading_eigvecs(const Eigen::MatrixBase<Derived>& A, Index r) {
    using Scalar = typename Derived::Scalar;
    require(A.rows() == A.cols(), "leading_eigvecs: matrix must be square");
    require(r >= 1 && r <= A.rows(), "leading_eigvecs: r out of range");
    Eigen::MatrixX<Scalar> H = A;
    const double scale = H.norm();
    if ((H - H.adjoint()).norm() > kHermitianTol * std::max(scale, 1e-300))
        throw invalid_argument("leading_eigvecs: input is not Hermitian within tolerance");
    H = ((H + H.adjoint()) / Scalar(2)).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixX<Scalar>> es(H);
    if (es.info() != Eigen::Success)
        throw numeric_error("leading_eigvecs: eigendecomposition failed on a "
                            + std::to_string(H.rows()) + "x" + std::to_string(H.cols())
                            + " matrix");
    // Eigen sorts ascending; take the top r in descending order.
    Eigen::MatrixX<Scalar> U(H.rows(), r);
    for (Index j = 0; j < r; ++j) U.col(j) = es.eigenvectors().col(H.rows() - 1 - j);
    detail::fix_column_phases<Scalar>(U);
    return U;
}

/// Sine of the largest principal angle between the column spans:
/// ||(I - U1 U1*) U2 U2*|| in spectral norm.  Inputs must have orthonormal
/// columns (within kOrthoInputTol) and matching row dimension.
template <typename D1, typename D2>
double subspace_sin(const Eigen::MatrixBase<D1>& U1, const Eigen::MatrixBase<D2>& U2) {
    using Scalar = typename D1::Scalar;
    require(U1.rows() == U2.rows(), "subspace_sin: row dimensions differ");
    auto check_ortho = [](const auto& U, const char* which) {
        Eigen::MatrixX<Scalar> G = U.adjoint() * U;
        G -= Eigen::MatrixX<Scalar>::Identity(U.cols(), U.cols());
        if (G.norm() > kOrthoInputTol * std::max<double>(1.0, std::sqrt(double(U.cols()))))
            throw invalid_argument(std::string("subspace_sin: ") + which
                                   + " does not have orthonormal columns");
    };
    check_ortho(U1, "first argument");
    check_ortho(U2, "second argument");
    Eigen::MatrixX<Scalar> W = U2 - U1 * (U1.adjoint() * U2);
    Eigen::JacobiSVD<Eigen::MatrixX<Scalar>> dec(W);
    const double s = dec.singularValues().size() ? dec.singularValues()(0) : 0.0;
    return std::clamp(s, 0.0, 1.0);
}

/// Unitary DFT matrix: F(j, k) = exp(-2 pi i j k / M) / sqrt(M).
inline cmat dft_matrix(Index M) {
    require(M >= 1, "dft_matrix: M must be >= 1");
    cmat F(M, M);
    const double w = -2.0 * M_PI / double(M);
    const double scale = 1.0 / std::sqrt(double(M));
    for (Index k = 0; k < M; ++k)
        for (Index j = 0; j < M; ++j) {
            // reduce j*k mod M first so the phase stays accurate for large M
            const double phase = w * double((j * k) % M);
            F(j, k) = scale * cplx(std::cos(phase), std::sin(phase));
        }
    return F;
}

/// Circular convolution, (x (*) h)[n] = sum_k x[k] h[(n - k) mod M].
inline cvec circular_convolve(const cvec& x, const cvec& h) {
    require(x.size() == h.size(), "circular_convolve: length mismatch");
    const Index M = x.size();
    cvec out = cvec::Zero(M);
    for (Index n = 0; n < M; ++n) {
        cplx acc = 0;
        for (Index k = 0; k < M; ++k) {
            Index idx = (n - k) % M;
            if (idx < 0) idx += M;
            acc += x[k] * h[idx];
        }
        out[n] = acc;
    }
    return out;
}

} // namespace lrpr

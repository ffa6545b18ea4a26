#pragma once

#include "lrpr/model.hpp"
#include "lrpr/types.hpp"

namespace lrpr {

enum class AnchorMethod { Rank1, RowToCol, PSD, NaiveVectorized, Oracle };

const char* to_string(AnchorMethod method);

/// Anchor factor pair with orthonormal columns and X0 = U0 V0*, so
/// ||X0||_F = sqrt(r).  Singular values are never estimated; the recovery
/// guarantees only need the product of the subspace bases.
struct Anchor {
    cmat U0;  // d1 x r, orthonormal columns
    cmat V0;  // d2 x r, orthonormal columns
    cmat X0;  // U0 V0*
    AnchorMethod method = AnchorMethod::Rank1;

    Index rank() const { return U0.cols(); }
};

Anchor make_anchor(cmat U0, cmat V0, AnchorMethod method);

/// Partial-trace matrix (1/M) sum_m y_m a_m a_m* (Hermitized).  The leading
/// eigenvector estimates the left singular vector of a rank-1 target.
cmat upsilon_rank1(const cmat& factors, const rvec& y);

/// Rank-1 spectral initialization: u0, v0 from the leading eigenvectors of
/// the two partial-trace matrices built from the same observations.
Anchor anchor_rank1(const Ensemble& ens, const rvec& y);

/// Rowspace-to-columnspace refinement for the Gaussian ensemble: given an
/// orthonormal rowspace estimate Vhat, returns the r leading eigenvectors of
/// (1/M) sum_m y_m Phi_m Vhat Vhat^T Phi_m^T.
cmat anchor_col_from_row(const Ensemble& ens, const rvec& y, const cmat& Vhat);

/// PSD pipeline: U0 = anchor_col_from_row(..., Vhat), V0 = U0, X0 = U0 U0*.
Anchor anchor_psd(const Ensemble& ens, const rvec& y, const cmat& Vhat);

/// Vectorized baseline: leading eigenvector of (1/M) sum y_m vec(Phi) vec(Phi)*
/// reshaped to d1 x d2, then rank-r truncated SVD.  Needs M on the order of
/// d1 d2 log(d1 d2) to work; disabled above d1*d2 = 4096.
Anchor anchor_naive_vectorized(const Ensemble& ens, const rvec& y, Index r);

/// Anchor assembled from the target's own compact SVD factors.
Anchor anchor_oracle(const cmat& Xsharp, Index r);

/// Anchor quality delta = min over unit-modulus z (two-point for real data)
/// of ||X0 - z Us Vs*||_F / ||Us Vs*||_F, where Us Vs* comes from the compact
/// SVD of the ground truth.
double anchor_quality(const Anchor& anchor, const cmat& Xsharp);

} // namespace lrpr

#include "lrpr/anchor.hpp"

#include "lrpr/numlin.hpp"

namespace lrpr {

const char* to_string(AnchorMethod method) {
    switch (method) {
        case AnchorMethod::Rank1: return "rank1";
        case AnchorMethod::RowToCol: return "row-to-col";
        case AnchorMethod::PSD: return "psd";
        case AnchorMethod::NaiveVectorized: return "naive-vectorized";
        case AnchorMethod::Oracle: return "oracle";
    }
    return "?";
}

Anchor make_anchor(cmat U0, cmat V0, AnchorMethod method) {
    require(U0.cols() == V0.cols(), "make_anchor: factor rank mismatch");
    Anchor anchor;
    anchor.U0 = std::move(U0);
    anchor.V0 = std::move(V0);
    anchor.X0 = anchor.U0 * anchor.V0.adjoint();
    anchor.method = method;
    return anchor;
}

cmat upsilon_rank1(const cmat& factors, const rvec& y) {
    require(factors.cols() == y.size(), "upsilon_rank1: length mismatch");
    cmat ups = factors * (y / double(y.size())).asDiagonal() * factors.adjoint();
    return ((ups + ups.adjoint()) / 2.0).eval();
}

Anchor anchor_rank1(const Ensemble& ens, const rvec& y) {
    require(ens.rank_one(), "anchor_rank1: requires a rank-1 ensemble kind");
    require(ens.M >= 1, "anchor_rank1: empty ensemble");
    require(y.size() == ens.M, "anchor_rank1: observation length mismatch");
    if (y.cwiseAbs().maxCoeff() == 0.0)
        throw numeric_error("anchor_rank1: degenerate observations (all-zero y)");
    cmat u0 = leading_eigvecs(upsilon_rank1(ens.a, y), 1);
    cmat v0 = leading_eigvecs(upsilon_rank1(ens.b, y), 1);
    return make_anchor(std::move(u0), std::move(v0), AnchorMethod::Rank1);
}

cmat anchor_col_from_row(const Ensemble& ens, const rvec& y, const cmat& Vhat) {
    require(ens.kind == EnsembleKind::GaussianIID,
            "anchor_col_from_row: requires the Gaussian ensemble");
    require(y.size() == ens.M, "anchor_col_from_row: observation length mismatch");
    require(Vhat.rows() == ens.d2, "anchor_col_from_row: Vhat row dimension mismatch");
    const Index r = Vhat.cols();
    require(r >= 1 && r <= std::min(ens.d1, ens.d2), "anchor_col_from_row: rank out of range");
    cmat G = Vhat.adjoint() * Vhat - cmat::Identity(r, r);
    require(G.norm() <= kOrthoInputTol * std::max(1.0, std::sqrt(double(r))),
            "anchor_col_from_row: Vhat does not have orthonormal columns");

    cmat ups = cmat::Zero(ens.d1, ens.d1);
    for (Index m = 0; m < ens.M; ++m) {
        cmat Phi = ens.phis.col(m).reshaped(ens.d1, ens.d2).cast<cplx>();
        cmat W = Phi * Vhat;  // d1 x r compressed measurement
        ups.noalias() += y[m] * (W * W.adjoint());
    }
    ups /= double(ens.M);
    ups = ((ups + ups.adjoint()) / 2.0).eval();
    return leading_eigvecs(ups, r);
}

Anchor anchor_psd(const Ensemble& ens, const rvec& y, const cmat& Vhat) {
    cmat U0 = anchor_col_from_row(ens, y, Vhat);
    cmat V0 = U0;
    return make_anchor(std::move(U0), std::move(V0), AnchorMethod::PSD);
}

Anchor anchor_naive_vectorized(const Ensemble& ens, const rvec& y, Index r) {
    require(y.size() == ens.M, "anchor_naive_vectorized: observation length mismatch");
    require(r >= 1 && r <= std::min(ens.d1, ens.d2), "anchor_naive_vectorized: rank out of range");
    if (ens.d1 * ens.d2 > 4096)
        throw invalid_argument("anchor_naive_vectorized: vectorized baseline disabled at this size");
    if (y.cwiseAbs().maxCoeff() == 0.0)
        throw numeric_error("anchor_naive_vectorized: degenerate observations (all-zero y)");

    const Index n = ens.d1 * ens.d2;
    cmat R = cmat::Zero(n, n);
    if (ens.kind == EnsembleKind::GaussianIID) {
        R = (ens.phis * (y / double(ens.M)).asDiagonal() * ens.phis.transpose()).cast<cplx>();
    } else {
        for (Index m = 0; m < ens.M; ++m) {
            cmat Phi = ens.a.col(m) * ens.b.col(m).adjoint();
            cvec phi = Phi.reshaped();
            R.noalias() += (y[m] / double(ens.M)) * (phi * phi.adjoint());
        }
    }
    R = ((R + R.adjoint()) / 2.0).eval();
    cmat lead = leading_eigvecs(R, 1);
    cmat Xr = lead.col(0).reshaped(ens.d1, ens.d2);
    auto dec = svd(Xr);
    return make_anchor(dec.U.leftCols(r), dec.V.leftCols(r), AnchorMethod::NaiveVectorized);
}

Anchor anchor_oracle(const cmat& Xsharp, Index r) {
    require(r >= 1 && r <= std::min(Xsharp.rows(), Xsharp.cols()),
            "anchor_oracle: rank out of range");
    auto dec = svd(Xsharp);
    require(dec.sigma(r - 1) > kRankCutoff * dec.sigma(0),
            "anchor_oracle: target has rank below the requested r");
    return make_anchor(dec.U.leftCols(r), dec.V.leftCols(r), AnchorMethod::Oracle);
}

double anchor_quality(const Anchor& anchor, const cmat& Xsharp) {
    require(anchor.U0.rows() == Xsharp.rows() && anchor.V0.rows() == Xsharp.cols(),
            "anchor_quality: shape mismatch");
    const Index r = anchor.rank();
    auto dec = svd(Xsharp);
    Index rank_sharp = 0;
    while (rank_sharp < dec.sigma.size() && dec.sigma(rank_sharp) > kRankCutoff * dec.sigma(0))
        ++rank_sharp;
    require(rank_sharp == r, "anchor_quality: rank mismatch between anchor and truth");
    cmat T = dec.U.leftCols(r) * dec.V.leftCols(r).adjoint();

    const bool real_case = anchor.X0.imag().cwiseAbs().maxCoeff() == 0.0
                           && Xsharp.imag().cwiseAbs().maxCoeff() == 0.0;
    const double rr = double(r);
    double dist2;
    if (real_case) {
        dist2 = std::min((anchor.X0 - T).squaredNorm(), (anchor.X0 + T).squaredNorm());
    } else {
        const double ip = std::abs((T.conjugate().cwiseProduct(anchor.X0)).sum());
        dist2 = std::max(0.0, 2.0 * rr - 2.0 * ip);
    }
    return std::sqrt(dist2) / std::sqrt(rr);
}

} // namespace lrpr

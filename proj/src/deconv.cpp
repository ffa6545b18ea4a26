#include "lrpr/deconv.hpp"

#include "lrpr/anchor.hpp"
#include "lrpr/numlin.hpp"

namespace lrpr {

Ensemble build_structured_ensemble(const SubspaceModel& sm) {
    require(sm.d1() <= sm.M() && sm.d2() <= sm.M(),
            "build_structured_ensemble: subspace dimensions exceed M");
    const cmat F = dft_matrix(sm.M());
    Ensemble ens;
    ens.kind = EnsembleKind::Structured;
    ens.d1 = sm.d1();
    ens.d2 = sm.d2();
    ens.M = sm.M();
    ens.a = sm.D.adjoint() * F.adjoint();
    ens.b = sm.E.transpose() * F.transpose();
    return ens;
}

rvec forward_conv_magnitudes(const SubspaceModel& sm, const cvec& u, const cvec& v) {
    require(u.size() == sm.d1(), "forward_conv_magnitudes: u length mismatch");
    require(v.size() == sm.d2(), "forward_conv_magnitudes: v length mismatch");
    cvec x = sm.D * u;
    cvec h = sm.E * v.conjugate();
    cvec conv = circular_convolve(x, h);
    return (dft_matrix(sm.M()) * conv).cwiseAbs2();
}

DeconvResult recover_signals(const SubspaceModel& sm, const rvec& y, const SolverConfig& cfg) {
    require(y.size() == sm.M(), "recover_signals: observation length mismatch");
    Ensemble ens = build_structured_ensemble(sm);

    DeconvResult res;
    const bool degenerate = y.cwiseAbs().maxCoeff() == 0.0;
    if (degenerate) {
        // nothing to anchor on; the constraints only admit X = 0
        cmat u0 = cmat::Zero(ens.d1, 1), v0 = cmat::Zero(ens.d2, 1);
        u0(0, 0) = 1;
        v0(0, 0) = 1;
        res.report = solve(ens, y, make_anchor(u0, v0, AnchorMethod::Rank1), cfg);
    } else {
        res.report = solve(ens, y, anchor_rank1(ens, y), cfg);
    }

    auto dec = svd(res.report.Xhat);
    res.sigma = dec.sigma.size() ? dec.sigma(0) : 0.0;
    if (degenerate || res.sigma == 0.0) {
        res.u = cvec::Zero(sm.d1());
        res.v = cvec::Zero(sm.d2());
        res.sigma = 0;
        res.factors_defined = false;
        return res;
    }
    res.u = dec.U.col(0);
    res.v = dec.V.col(0);
    res.factors_defined = true;
    return res;
}

} // namespace lrpr

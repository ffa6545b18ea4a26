#pragma once

#include "lrpr/model.hpp"
#include "lrpr/solver.hpp"
#include "lrpr/types.hpp"

namespace lrpr {

/// Subspace priors for blind deconvolution: x = D u, h = E conj(v), with only
/// the Fourier magnitudes of x (*) h observed.
struct SubspaceModel {
    cmat D;  // M x d1
    cmat E;  // M x d2

    Index M() const { return D.rows(); }
    Index d1() const { return D.cols(); }
    Index d2() const { return E.cols(); }
};

/// Lifted measurement vectors: a_m = column m of D* F*, b_m = column m of
/// E^T F^T, so that a_m* (u v*) b_m = (F D u)_m (F E conj(v))_m.
Ensemble build_structured_ensemble(const SubspaceModel& sm);

/// |F(Du (*) E conj(v))|^2 computed in the time domain (convolve, DFT,
/// modulus squared).  Equals M times the lifted clean measurements.
rvec forward_conv_magnitudes(const SubspaceModel& sm, const cvec& u, const cvec& v);

struct DeconvResult {
    cvec u;
    cvec v;
    double sigma = 0;
    SolveReport report;
    bool factors_defined = false;  // false when Xhat vanished (e.g. zero data)
};

/// Full pipeline: rank-1 spectral anchor, anchored-regression solve, leading
/// singular triple of Xhat with the factor phases normalized.
DeconvResult recover_signals(const SubspaceModel& sm, const rvec& y, const SolverConfig& cfg);

} // namespace lrpr

#pragma once

#include "lrpr/rng.hpp"
#include "lrpr/types.hpp"

namespace lrpr {

enum class EnsembleKind { GaussianIID, RankOneComplex, Structured };

const char* to_string(EnsembleKind kind);

/// A family of M measurement matrices.  Gaussian ensembles store the matrices
/// as vec(Phi_m) columns; rank-1 kinds store only the factor vectors a_m, b_m
/// (Phi_m = a_m b_m*), never the materialized d1 x d2 matrices.
struct Ensemble {
    EnsembleKind kind = EnsembleKind::GaussianIID;
    Index d1 = 0, d2 = 0, M = 0;
    rmat phis;  // (d1*d2) x M, GaussianIID only
    cmat a;     // d1 x M, rank-1 kinds only
    cmat b;     // d2 x M, rank-1 kinds only

    bool rank_one() const { return kind != EnsembleKind::GaussianIID; }
};

/// Measurements y = clean + xi with clean_m = |<Phi_m, X>|^2 >= 0.  The noise
/// vector xi is simulator-side knowledge (used for error budgets), never an
/// input to recovery.
struct Observations {
    rvec y, xi, clean;
};

Ensemble sample_gaussian_iid(Index d1, Index d2, Index M, const RngSpec& rng);
Ensemble sample_rank1_complex(Index d1, Index d2, Index M, const RngSpec& rng);

/// Gaussian ensemble with every Phi_m transposed (and the rank-1 equivalent
/// via conjugated factor swap); used when exchanging row/column space roles.
Ensemble transpose_ensemble(const Ensemble& ens);

/// z_m = <Phi_m, X> = trace(Phi_m* X), the linear map inside the modulus.
cvec forward_map(const Ensemble& ens, const cmat& X);

/// sum_m z_m Phi_m; adjoint of forward_map under <A, B> = trace(A* B).
cmat adjoint_map(const Ensemble& ens, const cvec& z);

Observations measure(const Ensemble& ens, const cmat& X);
Observations measure(const Ensemble& ens, const cmat& X, const rvec& noise);

/// Power iteration estimate of the operator norm of forward_map (Frobenius to
/// l2).  Always a lower bound on the true norm and nondecreasing in iters.
double opnorm_estimate(const Ensemble& ens, int iters, const RngSpec& rng);

/// Noise factory.  Noise streams are derived separately from ensemble streams
/// so the two stay independent by construction.
struct NoiseSpec {
    enum class Type { Zero, Constant, Gaussian, Uniform };
    Type type = Type::Zero;
    double value = 0;          // Constant
    double sigma = 0;          // Gaussian
    double lo = 0, hi = 0;     // Uniform
};

rvec sample_noise(const NoiseSpec& spec, Index M, const RngSpec& rng);

} // namespace lrpr

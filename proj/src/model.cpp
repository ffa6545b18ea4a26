#include "lrpr/model.hpp"

namespace lrpr {

const char* to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::GaussianIID: return "gaussian";
        case EnsembleKind::RankOneComplex: return "rank1";
        case EnsembleKind::Structured: return "structured";
    }
    return "?";
}

Ensemble sample_gaussian_iid(Index d1, Index d2, Index M, const RngSpec& rng) {
    require(d1 >= 1 && d2 >= 1 && M >= 1, "sample_gaussian_iid: dims must be >= 1");
    Ensemble ens;
    ens.kind = EnsembleKind::GaussianIID;
    ens.d1 = d1;
    ens.d2 = d2;
    ens.M = M;
    Rng gen(rng);
    ens.phis = gen.gaussian_mat(d1 * d2, M);
    return ens;
}

Ensemble sample_rank1_complex(Index d1, Index d2, Index M, const RngSpec& rng) {
    require(d1 >= 1 && d2 >= 1 && M >= 1, "sample_rank1_complex: dims must be >= 1");
    Ensemble ens;
    ens.kind = EnsembleKind::RankOneComplex;
    ens.d1 = d1;
    ens.d2 = d2;
    ens.M = M;
    Rng ga(substream(rng, "rank1/a"));
    Rng gb(substream(rng, "rank1/b"));
    ens.a = ga.cgaussian_mat(d1, M);
    ens.b = gb.cgaussian_mat(d2, M);
    return ens;
}

Ensemble transpose_ensemble(const Ensemble& ens) {
    Ensemble out;
    out.kind = ens.kind;
    out.d1 = ens.d2;
    out.d2 = ens.d1;
    out.M = ens.M;
    if (ens.kind == EnsembleKind::GaussianIID) {
        out.phis.resize(ens.d1 * ens.d2, ens.M);
        for (Index m = 0; m < ens.M; ++m) {
            rmat Phi = ens.phis.col(m).reshaped(ens.d1, ens.d2);
            out.phis.col(m) = Phi.transpose().reshaped();
        }
    } else {
        // (a b*)^T = conj(b) a^T = conj(b) conj(a)*
        out.a = ens.b.conjugate();
        out.b = ens.a.conjugate();
    }
    return out;
}

cvec forward_map(const Ensemble& ens, const cmat& X) {
    require(X.rows() == ens.d1 && X.cols() == ens.d2, "forward_map: shape mismatch");
    if (ens.kind == EnsembleKind::GaussianIID) {
        // <Phi, X> = vec(Phi)^T vec(X) for real Phi
        rvec re = X.real().reshaped();
        rvec im = X.imag().reshaped();
        rvec zr = ens.phis.transpose() * re;
        rvec zi = ens.phis.transpose() * im;
        cvec z(ens.M);
        z.real() = zr;
        z.imag() = zi;
        return z;
    }
    // z_m = a_m* X b_m
    cmat W = X * ens.b;                                  // d1 x M
    return (ens.a.conjugate().cwiseProduct(W)).colwise().sum().transpose();
}

cmat adjoint_map(const Ensemble& ens, const cvec& z) {
    require(z.size() == ens.M, "adjoint_map: length mismatch");
    if (ens.kind == EnsembleKind::GaussianIID) {
        rvec re = ens.phis * rvec(z.real());
        rvec im = ens.phis * rvec(z.imag());
        cmat out(ens.d1, ens.d2);
        out.real() = re.reshaped(ens.d1, ens.d2);
        out.imag() = im.reshaped(ens.d1, ens.d2);
        return out;
    }
    // sum_m z_m a_m b_m* = A diag(z) B*
    return ens.a * z.asDiagonal() * ens.b.adjoint();
}

Observations measure(const Ensemble& ens, const cmat& X) {
    Observations obs;
    obs.clean = forward_map(ens, X).cwiseAbs2();
    obs.xi = rvec::Zero(ens.M);
    obs.y = obs.clean;
    return obs;
}

Observations measure(const Ensemble& ens, const cmat& X, const rvec& noise) {
    require(noise.size() == ens.M, "measure: noise length mismatch");
    Observations obs;
    obs.clean = forward_map(ens, X).cwiseAbs2();
    obs.xi = noise;
    obs.y = obs.clean + obs.xi;
    return obs;
}

double opnorm_estimate(const Ensemble& ens, int iters, const RngSpec& rng) {
    require(iters >= 1, "opnorm_estimate: iters must be >= 1");
    Rng gen(substream(rng, "opnorm"));
    cmat X = gen.cgaussian_mat(ens.d1, ens.d2);
    double nx = X.norm();
    if (nx == 0) return 0;
    double est = 0;
    for (int k = 0; k < iters; ++k) {
        X /= nx;
        cvec z = forward_map(ens, X);
        est = z.norm();  // ||A x|| / ||x|| <= ||A||, Rayleigh quotient of A*A
        if (est == 0) return 0;
        X = adjoint_map(ens, z);
        nx = X.norm();
        if (nx == 0) return est;
    }
    return est;
}

rvec sample_noise(const NoiseSpec& spec, Index M, const RngSpec& rng) {
    require(M >= 0, "sample_noise: M must be >= 0");
    Rng gen(substream(rng, "noise"));
    rvec xi(M);
    switch (spec.type) {
        case NoiseSpec::Type::Zero:
            xi.setZero();
            break;
        case NoiseSpec::Type::Constant:
            xi.setConstant(spec.value);
            break;
        case NoiseSpec::Type::Gaussian:
            require(spec.sigma >= 0, "sample_noise: sigma must be >= 0");
            for (Index i = 0; i < M; ++i) xi[i] = spec.sigma * gen.gaussian();
            break;
        case NoiseSpec::Type::Uniform:
            require(spec.lo <= spec.hi, "sample_noise: lo must be <= hi");
            for (Index i = 0; i < M; ++i) xi[i] = gen.uniform(spec.lo, spec.hi);
            break;
    }
    return xi;
}

} // namespace lrpr

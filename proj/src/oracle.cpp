#include "lrpr/oracle.hpp"

#include "lrpr/numlin.hpp"

#include <cmath>

namespace lrpr {

namespace {

Index flat4(int i1, int i2, int i3, int i4, int d) {
    return Index(i1) + Index(d) * (Index(i2) + Index(d) * (Index(i3) + Index(d) * i4));
}

void finalize_errors(MomentReport& rep) {
    rep.max_abs_err = (rep.empirical - rep.analytic).cwiseAbs().maxCoeff();
    const double scale = rep.analytic.norm();
    rep.rel_fro_err = scale > 0 ? (rep.empirical - rep.analytic).norm() / scale
                                : (rep.empirical).norm();
}

rvec stack_complex(const cmat& A) {
    rvec out(2 * A.size());
    out.head(A.size()) = A.real().reshaped();
    out.tail(A.size()) = A.imag().reshaped();
    return out;
}

} // namespace

MomentReport fourth_moment_check(int d, long N, const RngSpec& rng) {
    require(d >= 1 && d <= 6, "fourth_moment_check: d must be in [1, 6]");
    require(N >= 10000, "fourth_moment_check: N must be >= 1e4");
    const Index n = Index(d) * d * d * d;
    MomentReport rep;
    rep.name = "fourth_moment";
    rep.dims = {d, d, d, d};
    rep.samples = N;
    rep.seed = rng;

    rep.analytic = rvec::Zero(n);
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int i3 = 0; i3 < d; ++i3)
                for (int i4 = 0; i4 < d; ++i4)
                    rep.analytic[flat4(i1, i2, i3, i4, d)] =
                        double((i1 == i2) && (i3 == i4)) + double((i1 == i3) && (i2 == i4))
                        + double((i1 == i4) && (i2 == i3));

    Rng gen(rng);
    rvec acc = rvec::Zero(n);
    rvec g(d);
    for (long s = 0; s < N; ++s) {
        for (int i = 0; i < d; ++i) g[i] = gen.gaussian();
        for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2) {
                const double g12 = g[i1] * g[i2];
                for (int i3 = 0; i3 < d; ++i3)
                    for (int i4 = 0; i4 < d; ++i4)
                        acc[flat4(i1, i2, i3, i4, d)] += g12 * g[i3] * g[i4];
            }
    }
    rep.empirical = acc / double(N);
    finalize_errors(rep);
    return rep;
}

MomentReport quad_form_check(const rvec& x, const rvec& y, long N, const RngSpec& rng) {
    require(x.size() == y.size(), "quad_form_check: length mismatch");
    require(x.size() >= 1 && x.size() <= 64, "quad_form_check: d must be in [1, 64]");
    const Index d = x.size();
    MomentReport rep;
    rep.name = "quad_form";
    rep.dims = {d, d};
    rep.samples = N;
    rep.seed = rng;

    rmat analytic = x.dot(y) * rmat::Identity(d, d) + x * y.transpose() + y * x.transpose();
    rep.analytic = analytic.reshaped();

    Rng gen(rng);
    rmat acc = rmat::Zero(d, d);
    rvec g(d);
    for (long s = 0; s < N; ++s) {
        for (Index i = 0; i < d; ++i) g[i] = gen.gaussian();
        acc.noalias() += (x.dot(g) * g.dot(y)) * (g * g.transpose());
    }
    rep.empirical = rvec((acc / double(N)).reshaped());
    finalize_errors(rep);
    return rep;
}

MomentReport octa_moment_check(const rvec& x, long N, const RngSpec& rng) {
    const int d = int(x.size());
    require(d >= 1 && d <= 4, "octa_moment_check: d must be in [1, 4]");
    require(N >= 100000, "octa_moment_check: N must be >= 1e5");
    require(std::abs(x.norm() - 1.0) <= 1e-12, "octa_moment_check: x must be a unit vector");
    const Index n = Index(d) * d * d * d;
    MomentReport rep;
    rep.name = "octa_moment";
    rep.dims = {d, d, d, d};
    rep.samples = N;
    rep.seed = rng;

    rep.analytic = rvec::Zero(n);
    auto delta = [](int i, int j) { return i == j ? 1.0 : 0.0; };
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int i3 = 0; i3 < d; ++i3)
                for (int i4 = 0; i4 < d; ++i4) {
                    double v = 24.0 * x[i1] * x[i2] * x[i3] * x[i4];
                    v += 12.0
                         * (x[i1] * x[i2] * delta(i3, i4) + x[i1] * x[i3] * delta(i2, i4)
                            + x[i1] * x[i4] * delta(i2, i3) + x[i2] * x[i3] * delta(i1, i4)
                            + x[i2] * x[i4] * delta(i1, i3) + x[i3] * x[i4] * delta(i1, i2));
                    v += 3.0
                         * (delta(i1, i2) * delta(i3, i4) + delta(i1, i3) * delta(i2, i4)
                            + delta(i1, i4) * delta(i2, i3));
                    rep.analytic[flat4(i1, i2, i3, i4, d)] = v;
                }

    Rng gen(rng);
    rvec acc = rvec::Zero(n);
    rvec g(d);
    for (long s = 0; s < N; ++s) {
        for (int i = 0; i < d; ++i) g[i] = gen.gaussian();
        const double xg = x.dot(g);
        const double w = xg * xg * xg * xg;
        for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2) {
                const double wg12 = w * g[i1] * g[i2];
                for (int i3 = 0; i3 < d; ++i3)
                    for (int i4 = 0; i4 < d; ++i4)
                        acc[flat4(i1, i2, i3, i4, d)] += wg12 * g[i3] * g[i4];
            }
    }
    rep.empirical = acc / double(N);
    finalize_errors(rep);
    return rep;
}

MomentReport complex_moment_check(long N, const RngSpec& rng) {
    require(N >= 100000, "complex_moment_check: N must be >= 1e5");
    MomentReport rep;
    rep.name = "complex_moments";
    rep.dims = {4};
    rep.samples = N;
    rep.seed = rng;
    rep.analytic = rvec(4);
    rep.analytic << 1, 2, 6, 24;

    Rng gen(rng);
    rvec acc = rvec::Zero(4);
    for (long s = 0; s < N; ++s) {
        const cplx g = gen.cgaussian();
        const double m2 = std::norm(g);
        acc[0] += m2;
        acc[1] += m2 * m2;
        acc[2] += m2 * m2 * m2;
        acc[3] += m2 * m2 * m2 * m2;
    }
    rep.empirical = acc / double(N);
    finalize_errors(rep);
    return rep;
}

MomentReport expected_upsilon_rank1_check(const cvec& u, const cvec& v, double sigma,
                                          double xi_mean, Index d1, long M,
                                          const RngSpec& rng) {
    require(u.size() == d1, "expected_upsilon_rank1_check: u length mismatch");
    require(std::abs(u.norm() - 1.0) <= 1e-12 && std::abs(v.norm() - 1.0) <= 1e-12,
            "expected_upsilon_rank1_check: u, v must be unit vectors");
    require(M >= 1, "expected_upsilon_rank1_check: M must be >= 1");
    MomentReport rep;
    rep.name = "expected_upsilon_rank1";
    rep.dims = {d1, d1};
    rep.samples = M;
    rep.seed = rng;

    cmat analytic = sigma * sigma * (u * u.adjoint())
                    + (sigma * sigma + xi_mean) * cmat::Identity(d1, d1);
    rep.analytic = stack_complex(analytic);

    Rng ga(substream(rng, "rank1/a"));
    Rng gb(substream(rng, "rank1/b"));
    const Index d2 = v.size();
    cmat acc = cmat::Zero(d1, d1);
    cvec a(d1), b(d2);
    for (long m = 0; m < M; ++m) {
        for (Index i = 0; i < d1; ++i) a[i] = ga.cgaussian();
        for (Index i = 0; i < d2; ++i) b[i] = gb.cgaussian();
        const double ym = sigma * sigma * std::norm(u.dot(a)) * std::norm(b.dot(v)) + xi_mean;
        acc.noalias() += ym * (a * a.adjoint());
    }
    acc /= double(M);
    acc = ((acc + acc.adjoint()) / 2.0).eval();
    rep.empirical = stack_complex(acc);
    finalize_errors(rep);
    return rep;
}

MomentReport expected_upsilon_rankr_check(const rmat& Xsharp, const rmat& Vhat,
                                          double xi_mean, long M, const RngSpec& rng) {
    require(Vhat.rows() == Xsharp.cols(), "expected_upsilon_rankr_check: Vhat shape mismatch");
    require(M >= 1, "expected_upsilon_rankr_check: M must be >= 1");
    const Index d1 = Xsharp.rows(), d2 = Xsharp.cols(), r = Vhat.cols();
    rmat G = Vhat.transpose() * Vhat - rmat::Identity(r, r);
    require(G.norm() <= kOrthoInputTol * std::max(1.0, std::sqrt(double(r))),
            "expected_upsilon_rankr_check: Vhat does not have orthonormal columns");

    MomentReport rep;
    rep.name = "expected_upsilon_rankr";
    rep.dims = {d1, d1};
    rep.samples = M;
    rep.seed = rng;

    rmat P = Xsharp * Vhat;
    rmat analytic = 2.0 * (P * P.transpose())
                    + (double(r) * Xsharp.squaredNorm() + double(r) * xi_mean)
                          * rmat::Identity(d1, d1);
    rep.analytic = analytic.reshaped();

    Rng gen(rng);
    rmat acc = rmat::Zero(d1, d1);
    rmat Phi(d1, d2);
    for (long m = 0; m < M; ++m) {
        for (Index j = 0; j < d2; ++j)
            for (Index i = 0; i < d1; ++i) Phi(i, j) = gen.gaussian();
        const double inner = (Phi.cwiseProduct(Xsharp)).sum();
        const double ym = inner * inner + xi_mean;
        rmat W = Phi * Vhat;
        acc.noalias() += ym * (W * W.transpose());
    }
    acc /= double(M);
    acc = ((acc + acc.transpose()) / 2.0).eval();
    rep.empirical = rvec(acc.reshaped());
    finalize_errors(rep);
    return rep;
}

TailReport gauss_product_tail_check(double rho, double t, long N, const RngSpec& rng) {
    require(rho > -1.0 && rho <= 1.0, "gauss_product_tail_check: rho must be in (-1, 1]");
    require(t > 0, "gauss_product_tail_check: t must be positive");
    require(N >= 1000, "gauss_product_tail_check: N must be >= 1000");
    TailReport rep;
    rep.samples = N;
    rep.bound = (2.0 / M_PI) * std::acos(std::sqrt(3.0 - rho) / 2.0)
                * std::exp(-2.0 * t / (1.0 + rho));

    const double ca = std::sqrt((1.0 + rho) / 2.0);
    const double cb = std::sqrt((1.0 - rho) / 2.0);
    Rng gen(rng);
    long hits = 0;
    for (long s = 0; s < N; ++s) {
        const double w1 = gen.gaussian();
        const double w2 = gen.gaussian();
        const double g1 = ca * w1 + cb * w2;
        const double g2 = ca * w1 - cb * w2;
        if (g1 * g2 > t) ++hits;
    }
    rep.empirical = double(hits) / double(N);
    rep.std_error = std::sqrt(std::max(rep.empirical * (1.0 - rep.empirical), 1e-12) / double(N));
    rep.pass = rep.empirical >= rep.bound - 3.0 * rep.std_error;
    return rep;
}

DavisKahanReport davis_kahan_check(const cmat& A, const cmat& Delta, Index r) {
    require(A.rows() == A.cols() && Delta.rows() == Delta.cols() && A.rows() == Delta.rows(),
            "davis_kahan_check: matrices must be square and same size");
    require(r >= 1 && r < A.rows(), "davis_kahan_check: need 1 <= r < n");
    const cmat Ah = (A + A.adjoint()) / 2.0;
    const cmat Dh = (Delta + Delta.adjoint()) / 2.0;
    require((A - Ah).norm() <= kHermitianTol * std::max(1.0, A.norm()),
            "davis_kahan_check: A is not Hermitian");
    require((Delta - Dh).norm() <= kHermitianTol * std::max(1.0, Delta.norm()),
            "davis_kahan_check: Delta is not Hermitian");

    // The PSD hypothesis is met by a common spectral shift, which changes
    // neither eigenvectors nor the gap, so no explicit shift is applied.
    Eigen::SelfAdjointEigenSolver<cmat> esA(Ah);
    Eigen::SelfAdjointEigenSolver<cmat> esB(Ah + Dh);

    DavisKahanReport rep;
    const Index n = A.rows();
    const auto& evals = esA.eigenvalues();  // ascending
    rep.gap = evals[n - r] - evals[n - r - 1];
    if (rep.gap <= 0) {
        rep.skipped = true;
        return rep;
    }
    Eigen::JacobiSVD<cmat> dsvd(Dh);
    rep.delta_norm = dsvd.singularValues()(0);
    rep.precondition_holds = rep.delta_norm <= rep.gap / 5.0;
    rep.bound = 4.0 * rep.delta_norm / rep.gap;

    cmat Q(n, r), Qh(n, r);
    for (Index j = 0; j < r; ++j) {
        Q.col(j) = esA.eigenvectors().col(n - 1 - j);
        Qh.col(j) = esB.eigenvectors().col(n - 1 - j);
    }
    rep.sin_angle = subspace_sin(Q, Qh);
    rep.bound_holds = rep.sin_angle <= rep.bound;
    return rep;
}

} // namespace lrpr

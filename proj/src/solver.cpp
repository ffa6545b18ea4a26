#include "lrpr/solver.hpp"

#include "lrpr/numlin.hpp"

#include <cmath>

namespace lrpr {

const char* to_string(SolveMode mode) {
    return mode == SolveMode::DiskProjection ? "disk-projection" : "hinge-penalty";
}

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::MaxIter: return "max-iter";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "?";
}

cplx disk_project(cplx z, double radius) {
    require(radius >= 0, "disk_project: radius must be nonnegative");
    const double m = std::abs(z);
    if (m <= radius) return z;
    return z * (radius / m);
}

double objective(const cmat& X, const cmat& X0, double lambda) {
    require(X.rows() == X0.rows() && X.cols() == X0.cols(), "objective: shape mismatch");
    const double align = (X0.conjugate().cwiseProduct(X)).sum().real();
    return -align + lambda * svd(X).sigma.sum();
}

double hinge_residual(const Ensemble& ens, const rvec& y, const cmat& X) {
    require(y.size() == ens.M, "hinge_residual: observation length mismatch");
    rvec r = forward_map(ens, X).cwiseAbs2() - y;
    return r.cwiseMax(0.0).mean();
}

namespace {

// Shared per-iteration bookkeeping: 10-iteration change window, feasibility,
// and the best-objective-so-far among feasible iterates.
struct IterState {
    explicit IterState(const SolverConfig& cfg, double mean_y, Index window = 10)
        : cfg(cfg), feas_thresh(cfg.eta + cfg.tol_feas * (1.0 + mean_y)), window(window) {}

    const SolverConfig& cfg;
    double feas_thresh;
    Index window;
    std::vector<cmat> ring;  // last `window` iterates
    int count = 0;
    double best_feasible = std::numeric_limits<double>::infinity();
    cmat best_X;
    std::vector<double> trace;

    // Returns true when the iterate has settled and is feasible.
    bool update(const cmat& X, double obj, double hinge) {
        const bool feasible = hinge <= feas_thresh;
        if (feasible && obj < best_feasible) {
            best_feasible = obj;
            best_X = X;
        }
        if (cfg.trace) trace.push_back(best_feasible);

        bool settled = false;
        if (count >= window) {
            const cmat& lag = ring[count % window];
            const double rel = (X - lag).norm() / std::max(1.0, X.norm());
            settled = rel <= cfg.tol_rel_change;
        }
        if (Index(ring.size()) < window)
            ring.push_back(X);
        else
            ring[count % window] = X;
        ++count;
        return settled && feasible;
    }
};

// Thresholded SVD recomposition; returns the nuclear norm of the output for free.
cmat svt_prox(const cmat& W, double tau, double* nuclear) {
    auto dec = svd(W);
    rvec s = (dec.sigma.array() - tau).max(0.0);
    *nuclear = s.sum();
    return dec.U * s.asDiagonal() * dec.V.adjoint();
}

// Fixed stream: solve must be a pure function of (ens, y, anchor, cfg), and
// the power-iteration start must not depend on the anchor (equivariance).
constexpr RngSpec kOpnormSeed{0x4c52505241525351ull, 7};

SolveReport finish(SolveReport&& rep, IterState& st) {
    if (st.cfg.trace) rep.best_feasible_trace = std::move(st.trace);
    return std::move(rep);
}

SolveReport solve_disk(const Ensemble& ens, const rvec& y, const Anchor& anchor,
                       const SolverConfig& cfg) {
    require(y.minCoeff() >= 0, "solve: DiskProjection mode requires y >= 0");
    const double L = opnorm_estimate(ens, 50, kOpnormSeed) * cfg.step_safety;
    const double tau = L > 0 ? 1.0 / L : 1.0;
    const double sigma = tau;
    const rvec radii = y.cwiseMax(0.0).cwiseSqrt();

    IterState st(cfg, y.mean());
    cmat X = anchor.X0;
    cvec z = cvec::Zero(ens.M);
    cvec ax = forward_map(ens, X);   // A X^k
    cvec ax_prev = ax;               // A X^{k-1}

    SolveReport rep;
    rep.status = SolveStatus::MaxIter;
    for (int k = 0; k < cfg.max_iter; ++k) {
        // dual ascent with per-measurement disk projection (Moreau identity)
        cvec w = z + sigma * (2.0 * ax - ax_prev);
        for (Index m = 0; m < ens.M; ++m)
            w[m] -= sigma * disk_project(w[m] / sigma, radii[m]);
        z = w;

        // primal descent: linear term absorbed, nuclear prox via SVT
        double nuclear = 0;
        cmat Xn = svt_prox(X - tau * adjoint_map(ens, z) + tau * anchor.X0,
                           tau * cfg.lambda, &nuclear);
        ax_prev = ax;
        ax = forward_map(ens, Xn);
        X = Xn;

        const double hinge = (ax.cwiseAbs2() - y).cwiseMax(0.0).mean();
        const double obj = -(anchor.X0.conjugate().cwiseProduct(X)).sum().real()
                           + cfg.lambda * nuclear;
        rep.iterations = k + 1;
        rep.objective = obj;
        rep.hinge = hinge;
        if (st.update(X, obj, hinge)) {
            rep.status = SolveStatus::Converged;
            break;
        }
    }
    rep.Xhat = X;
    return finish(std::move(rep), st);
}

SolveReport solve_hinge_penalty(const Ensemble& ens, const rvec& y, const Anchor& anchor,
                                const SolverConfig& cfg) {
    const double L = opnorm_estimate(ens, 50, kOpnormSeed) * cfg.step_safety;
    const double L2 = std::max(L * L, 1e-30);
    const int block = 100;     // iterations between penalty updates
    const double decay = 100;  // subgradient step decay horizon

    IterState st(cfg, y.mean());
    cmat X = anchor.X0;
    cvec z = forward_map(ens, X);
    double rho = cfg.penalty_rho_init;

    SolveReport rep;
    rep.status = SolveStatus::MaxIter;
    for (int k = 0; k < cfg.max_iter; ++k) {
        // diminishing steps damp the oscillation across the hinge kink
        const double step = double(ens.M) / (2.0 * rho * L2) / (1.0 + double(k) / decay);
        rvec excess = z.cwiseAbs2() - y;
        const double hinge = excess.cwiseMax(0.0).mean();

        cmat W = X + step * anchor.X0;
        if (hinge > cfg.eta) {
            cvec g = (excess.array() > 0).select(z, cvec::Zero(ens.M));
            W -= step * rho * (2.0 / double(ens.M)) * adjoint_map(ens, g);
        }
        double nuclear = 0;
        X = svt_prox(W, step * cfg.lambda, &nuclear);
        z = forward_map(ens, X);

        const double new_hinge = (z.cwiseAbs2() - y).cwiseMax(0.0).mean();
        const double obj = -(anchor.X0.conjugate().cwiseProduct(X)).sum().real()
                           + cfg.lambda * nuclear;
        rep.iterations = k + 1;
        if (st.update(X, obj, new_hinge)) {
            rep.status = SolveStatus::Converged;
            break;
        }
        if ((k + 1) % block == 0 && new_hinge > st.feas_thresh) {
            rho *= cfg.penalty_rho_growth;
            if (rho > 1e6 * cfg.penalty_rho_init) {
                rep.status = SolveStatus::Infeasible;
                break;
            }
        }
    }
    // subgradient iterates are not monotone; the best feasible one is the answer
    if (std::isfinite(st.best_feasible)) {
        rep.Xhat = st.best_X;
    } else {
        rep.Xhat = X;
    }
    rep.objective = objective(rep.Xhat, anchor.X0, cfg.lambda);
    rep.hinge = hinge_residual(ens, y, rep.Xhat);
    return finish(std::move(rep), st);
}

} // namespace

SolveReport solve(const Ensemble& ens, const rvec& y, const Anchor& anchor,
                  const SolverConfig& cfg) {
    require(anchor.U0.rows() == ens.d1 && anchor.V0.rows() == ens.d2,
            "solve: anchor shape does not match ensemble");
    require(y.size() == ens.M, "solve: observation length mismatch");
    require(cfg.lambda >= 0, "solve: lambda must be nonnegative");
    require(cfg.eta >= 0, "solve: eta must be nonnegative");
    require(cfg.max_iter >= 1, "solve: max_iter must be >= 1");
    require(cfg.penalty_rho_growth > 1, "solve: penalty growth must exceed 1");
    require(cfg.penalty_rho_init > 0, "solve: penalty rho must be positive");

    if (cfg.mode == SolveMode::DiskProjection) return solve_disk(ens, y, anchor, cfg);
    return solve_hinge_penalty(ens, y, anchor, cfg);
}

double default_lambda(double delta_estimate) {
    require(delta_estimate >= 0 && delta_estimate < 0.9,
            "default_lambda: delta must be in [0, 0.9)");
    return 0.9 - delta_estimate;
}

double eta_budget(const rvec& xi, double eps) {
    require(eps >= 0, "eta_budget: eps must be nonnegative");
    if (xi.size() == 0) return eps;
    return (-xi).cwiseMax(0.0).mean() + eps;
}

} // namespace lrpr

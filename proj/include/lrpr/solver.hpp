#pragma once

#include "lrpr/anchor.hpp"
#include "lrpr/model.hpp"
#include "lrpr/types.hpp"

#include <vector>

namespace lrpr {

enum class SolveMode { DiskProjection, HingePenalty };
enum class SolveStatus { Converged, MaxIter, Infeasible };

const char* to_string(SolveMode mode);
const char* to_string(SolveStatus status);

/// Anchored-regression solve of
///   minimize  -Re<X0, X> + lambda ||X||_*
/// subject to either the per-measurement disks |<Phi_m, X>|^2 <= y_m
/// (DiskProjection) or the averaged hinge budget
/// (1/M) sum (|<Phi_m, X>|^2 - y_m)_+ <= eta (HingePenalty).
struct SolverConfig {
    double lambda = 0.7;              // nuclear-norm weight
    double eta = 0.0;                 // hinge budget (HingePenalty)
    SolveMode mode = SolveMode::DiskProjection;
    int max_iter = 5000;
    double tol_rel_change = 1e-7;     // over a 10-iteration window
    double tol_feas = 1e-8;           // scaled by (1 + mean y)
    double penalty_rho_init = 1.0;
    double penalty_rho_growth = 2.0;
    double step_safety = 1.05;        // margin on the estimated operator norm
    bool trace = false;               // record best feasible objective per iteration
};

struct SolveReport {
    cmat Xhat;
    int iterations = 0;
    double objective = 0;  // -Re<X0, Xhat> + lambda ||Xhat||_*
    double hinge = 0;      // (1/M) sum (|<Phi_m, Xhat>|^2 - y_m)_+
    SolveStatus status = SolveStatus::MaxIter;
    std::vector<double> best_feasible_trace;  // filled when cfg.trace
};

/// Projection of a complex scalar onto the disk of the given radius.
cplx disk_project(cplx z, double radius);

/// -Re<X0, X> + lambda ||X||_*.
double objective(const cmat& X, const cmat& X0, double lambda);

/// (1/M) sum_m (|<Phi_m, X>|^2 - y_m)_+.
double hinge_residual(const Ensemble& ens, const rvec& y, const cmat& X);

SolveReport solve(const Ensemble& ens, const rvec& y, const Anchor& anchor,
                  const SolverConfig& cfg);

/// Regularization weight rule 0.9 - delta for an anchor of quality delta.
double default_lambda(double delta_estimate);

/// Hinge budget from known simulator noise: (1/M) sum (-xi_m)_+ + eps.
double eta_budget(const rvec& xi, double eps = 0.0);

} // namespace lrpr

#pragma once

#include "lrpr/rng.hpp"
#include "lrpr/types.hpp"

#include <string>
#include <vector>

// Monte Carlo checks of the closed-form Gaussian moment identities and
// perturbation bounds the pipeline relies on.  Each check draws its own
// samples, compares against the analytic expression, and reports the
// discrepancy; pass thresholds live next to the checks as named constants.

namespace lrpr {

struct MomentReport {
    std::string name;
    std::vector<Index> dims;   // logical shape of the compared object
    rvec analytic;             // flattened column-major; complex stored [Re; Im]
    rvec empirical;
    double max_abs_err = 0;
    double rel_fro_err = 0;    // ||empirical - analytic|| / ||analytic||
    long samples = 0;
    RngSpec seed;
};

// CLT-calibrated tolerances at the documented (d, N) operating points.
namespace oracle_tol {
inline constexpr double fourth_moment = 0.05;   // d = 2, N = 5e5
inline constexpr double quad_form = 0.05;       // d = 4, N = 2e5
inline constexpr double octa_moment = 0.6;      // d = 2, N = 1e6 (8th moments are heavy-tailed)
inline constexpr double complex_rel[4] = {0.01, 0.03, 0.05, 0.10};  // |g|^2,4,6,8 at N = 1e6
inline constexpr double upsilon_rel = 0.05;     // both E[Upsilon] checks, M = 2e5, d <= 8
} // namespace oracle_tol

/// E g (x) g (x) g (x) g against the three-pairing closed form; flat index
/// i1 + d i2 + d^2 i3 + d^3 i4.  d <= 6, N >= 1e4.
MomentReport fourth_moment_check(int d, long N, const RngSpec& rng);

/// E (x^T g g^T y) g g^T = (x^T y) I + x y^T + y x^T.
MomentReport quad_form_check(const rvec& x, const rvec& y, long N, const RngSpec& rng);

/// E (x^T g)^4 g (x) g (x) g (x) g for unit x; d <= 4, N >= 1e5.
MomentReport octa_moment_check(const rvec& x, long N, const RngSpec& rng);

/// Even moments of CN(0,1): E|g|^{2,4,6,8} = (1, 2, 6, 24).
MomentReport complex_moment_check(long N, const RngSpec& rng);

/// E Upsilon = sigma^2 u u* + (sigma^2 + mean xi) I for the rank-1 partial
/// trace, sampled from a fresh ensemble with constant noise xi_mean.
MomentReport expected_upsilon_rank1_check(const cvec& u, const cvec& v, double sigma,
                                          double xi_mean, Index d1, long M,
                                          const RngSpec& rng);

/// E Upsilon = 2 X Vhat Vhat^T X^T + (r ||X||_F^2 + r mean xi) I for the
/// Gaussian ensemble compressed through Vhat.
MomentReport expected_upsilon_rankr_check(const rmat& Xsharp, const rmat& Vhat,
                                          double xi_mean, long M, const RngSpec& rng);

/// Tail lower bound for a product of jointly Gaussian variables:
/// P(g1 g2 > t) >= (2/pi) acos(sqrt(3 - rho)/2) exp(-2t/(1 + rho)).
struct TailReport {
    bool pass = false;
    double empirical = 0;
    double bound = 0;
    double std_error = 0;  // binomial standard error of the empirical tail
    long samples = 0;
};

TailReport gauss_product_tail_check(double rho, double t, long N, const RngSpec& rng);

/// Numerical check of the sin-theta eigenspace perturbation bound: when
/// ||Delta|| <= gap/5, the angle between the top-r eigenspaces of A and
/// A + Delta is at most 4 ||Delta|| / gap.
struct DavisKahanReport {
    bool skipped = false;             // gap <= 0
    bool precondition_holds = false;  // ||Delta|| <= gap/5
    bool bound_holds = false;
    double gap = 0;
    double delta_norm = 0;
    double sin_angle = 0;
    double bound = 0;
};

DavisKahanReport davis_kahan_check(const cmat& A, const cmat& Delta, Index r);

} // namespace lrpr

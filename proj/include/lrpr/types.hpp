#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace lrpr {

using cplx = std::complex<double>;
using Index = Eigen::Index;

using rmat = Eigen::MatrixXd;
using rvec = Eigen::VectorXd;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

// Fixed numerical tolerances; deliberately constants, not configuration.
inline constexpr double kOrthoTol = 1e-10;        // orthonormality of computed factors
inline constexpr double kOrthoInputTol = 1e-8;    // orthonormality accepted on inputs
inline constexpr double kReconstructTol = 1e-8;   // relative SVD reconstruction
inline constexpr double kHermitianTol = 1e-10;    // relative Hermiticity of inputs
inline constexpr double kRankCutoff = 1e-10;      // sigma_i <= cutoff * sigma_1 counts as zero

/// Error for arguments that violate a documented precondition.
struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Error for numerical failures (non-convergence, degenerate data).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw invalid_argument(what);
}

} // namespace lrpr

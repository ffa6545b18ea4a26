#pragma once

#include "lrpr/solver.hpp"
#include "lrpr/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Experiment harness: phase-transition grid, noise-stability sweep,
// initialization-accuracy sweep, CSV + SVG emission.  Every trial derives its
// own random stream from (base_seed, M, d, trial), so results are identical
// regardless of worker count or scheduling.

namespace lrpr {

enum class AnchorPipeline { OracleAnchor, DataAnchor };

const char* to_string(AnchorPipeline pipeline);

struct PhaseGridSpec {
    std::vector<int> M_values;
    std::vector<int> d_values;          // d1 = d2 = d
    int trials = 20;
    double success_tol = 1e-4;          // relative phase distance
    AnchorPipeline pipeline = AnchorPipeline::OracleAnchor;
    std::uint64_t base_seed = 0;
    SolverConfig solver;                // noiseless solve settings per trial
    int workers = 1;                    // parallel cells; results independent of this
    bool record_runtime = false;        // off by default to keep CSV bytes reproducible
};

struct GridCell {
    int M = 0, d = 0;
    int trials = 0, successes = 0;
    double success_rate = 0;
    double median_relerr = 0;
    double runtime_ms = 0;  // zero unless record_runtime
};

struct GridResult {
    std::vector<int> M_values;
    std::vector<int> d_values;
    std::vector<GridCell> cells;  // row-major: index = mi * d_values.size() + di

    const GridCell& cell(std::size_t mi, std::size_t di) const {
        return cells[mi * d_values.size() + di];
    }
};

GridResult run_phase_transition(const PhaseGridSpec& spec);

/// Least-squares fit of the 50%-success boundary to d = c * M / log^alpha M.
/// Natural log; the base is absorbed into c.
struct TransitionFit {
    double c = 0;
    double alpha = 0;
    int boundary_points = 0;
};

TransitionFit fit_transition_curve(const GridResult& result);

struct NoiseSweepRow {
    double sigma = 0;         // requested noise level (std dev)
    double mean_abs_xi = 0;   // realized (1/M) sum |xi|, averaged over trials
    double eta = 0;           // hinge budget used, averaged over trials
    double median_err = 0;    // median relative phase distance
    int feasible = 0;         // trials whose solution met the hinge budget
    int trials = 0;
};

std::vector<NoiseSweepRow> run_noise_sweep(int d, int M, const std::vector<double>& noise_levels,
                                           int trials, std::uint64_t base_seed,
                                           const SolverConfig& base,
                                           AnchorPipeline pipeline = AnchorPipeline::OracleAnchor);

struct InitSweepRow {
    int M = 0;
    double median_delta = 0;  // median anchor quality
    int trials = 0;
};

std::vector<InitSweepRow> run_init_accuracy(int d, const std::vector<int>& M_values, int trials,
                                            std::uint64_t base_seed);

/// CSV with header M,d,trials,successes,success_rate,median_relerr,runtime_ms.
std::string grid_csv(const GridResult& result);
std::string noise_sweep_csv(const std::vector<NoiseSweepRow>& rows);
std::string init_sweep_csv(const std::vector<InitSweepRow>& rows);

/// Gray-scale phase-transition heat map (white: all success, black: all
/// failure) with the fitted boundary overlaid when given.  `meta` is embedded
/// in a <desc> element.
void emit_heatmap_svg(const GridResult& result, const TransitionFit* fit,
                      const std::string& path, const std::string& meta = "");

} // namespace lrpr

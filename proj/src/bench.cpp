#include "lrpr/bench.hpp"

#include "lrpr/anchor.hpp"
#include "lrpr/metrics.hpp"
#include "lrpr/model.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

namespace lrpr {

const char* to_string(AnchorPipeline pipeline) {
    return pipeline == AnchorPipeline::OracleAnchor ? "oracle-anchor" : "data-anchor";
}

namespace {

double median(std::vector<double> v) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::uint64_t trial_stream(std::uint64_t base, int M, int d, int trial) {
    std::uint64_t h = hash_str("bench-trial");
    h = derive_stream(h, std::uint64_t(M));
    h = derive_stream(h, std::uint64_t(d));
    h = derive_stream(h, std::uint64_t(trial));
    (void)base;  // base_seed travels in RngSpec.base_seed
    return h;
}

struct TrialOutcome {
    double err = std::numeric_limits<double>::infinity();
    bool success = false;
};

TrialOutcome run_trial(int M, int d, std::uint64_t base_seed, int trial, AnchorPipeline pipeline,
                       const SolverConfig& solver_cfg, double success_tol) {
    const RngSpec rng{base_seed, trial_stream(base_seed, M, d, trial)};
    TrialOutcome out;
    try {
        Ensemble ens = sample_rank1_complex(d, d, M, substream(rng, "ensemble"));
        Rng gen(substream(rng, "target"));
        cvec u = gen.cgaussian_vec(d).normalized();
        cvec v = gen.cgaussian_vec(d).normalized();
        cmat Xsharp = u * v.adjoint();  // unit Frobenius norm
        Observations obs = measure(ens, Xsharp);

        Anchor anchor = pipeline == AnchorPipeline::OracleAnchor
                            ? make_anchor(cmat(u), cmat(v), AnchorMethod::Oracle)
                            : anchor_rank1(ens, obs.y);
        SolveReport rep = solve(ens, obs.y, anchor, solver_cfg);
        out.err = phase_dist(rep.Xhat, Xsharp);  // ||Xsharp||_F = 1
        out.success = out.err <= success_tol;
    } catch (const std::exception&) {
        // recorded as a failed trial
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

GridResult run_phase_transition(const PhaseGridSpec& spec) {
    require(spec.trials >= 1, "run_phase_transition: trials must be >= 1");
    require(!spec.M_values.empty() && !spec.d_values.empty(),
            "run_phase_transition: empty grid");
    for (int M : spec.M_values) require(M >= 1, "run_phase_transition: M must be >= 1");
    for (int d : spec.d_values) require(d >= 1, "run_phase_transition: d must be >= 1");

    // Derived streams must never collide across (M, d, trial).
    std::set<std::uint64_t> streams;
    for (int M : spec.M_values)
        for (int d : spec.d_values)
            for (int t = 0; t < spec.trials; ++t)
                if (!streams.insert(trial_stream(spec.base_seed, M, d, t)).second)
                    throw numeric_error("run_phase_transition: derived stream collision");

    GridResult result;
    result.M_values = spec.M_values;
    result.d_values = spec.d_values;
    const std::size_t n_cells = spec.M_values.size() * spec.d_values.size();
    result.cells.resize(n_cells);

    auto run_cell = [&](std::size_t idx) {
        const std::size_t mi = idx / spec.d_values.size();
        const std::size_t di = idx % spec.d_values.size();
        const int M = spec.M_values[mi];
        const int d = spec.d_values[di];
        const auto t0 = std::chrono::steady_clock::now();

        GridCell cell;
        cell.M = M;
        cell.d = d;
        cell.trials = spec.trials;
        std::vector<double> errs;
        errs.reserve(spec.trials);
        for (int t = 0; t < spec.trials; ++t) {
            TrialOutcome out = run_trial(M, d, spec.base_seed, t, spec.pipeline, spec.solver,
                                         spec.success_tol);
            errs.push_back(out.err);
            if (out.success) ++cell.successes;
        }
        cell.success_rate = double(cell.successes) / double(cell.trials);
        cell.median_relerr = median(errs);
        if (spec.record_runtime) {
            const auto t1 = std::chrono::steady_clock::now();
            cell.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        result.cells[idx] = cell;
    };

    const int workers = std::max(1, spec.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < n_cells; ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_cells; i = next.fetch_add(1))
                    run_cell(i);
            });
        for (auto& th : pool) th.join();
    }
    return result;
}

TransitionFit fit_transition_curve(const GridResult& result) {
    // 50%-success crossing along d for each M, linearly interpolated.
    std::vector<double> Ms, dstars;
    for (std::size_t mi = 0; mi < result.M_values.size(); ++mi) {
        for (std::size_t di = 0; di + 1 < result.d_values.size(); ++di) {
            const double r0 = result.cell(mi, di).success_rate;
            const double r1 = result.cell(mi, di + 1).success_rate;
            if (r0 >= 0.5 && r1 < 0.5) {
                const double d0 = result.d_values[di], d1 = result.d_values[di + 1];
                const double frac = (r0 - 0.5) / std::max(r0 - r1, 1e-12);
                Ms.push_back(double(result.M_values[mi]));
                dstars.push_back(d0 + frac * (d1 - d0));
                break;
            }
        }
    }
    if (Ms.size() < 2)
        throw numeric_error("fit_transition_curve: grid does not straddle transition");

    // log d* = log c + log M - alpha log log M
    double st = 0, ss = 0, stt = 0, sts = 0;
    const double n = double(Ms.size());
    bool distinct = false;
    for (std::size_t i = 0; i < Ms.size(); ++i) {
        const double t = std::log(std::log(Ms[i]));
        const double s = std::log(dstars[i]) - std::log(Ms[i]);
        if (i > 0 && Ms[i] != Ms[0]) distinct = true;
        st += t;
        ss += s;
        stt += t * t;
        sts += t * s;
    }
    if (!distinct)
        throw numeric_error("fit_transition_curve: grid does not straddle transition");
    const double denom = n * stt - st * st;
    if (std::abs(denom) < 1e-12)
        throw numeric_error("fit_transition_curve: degenerate fit");
    const double slope = (n * sts - st * ss) / denom;  // = -alpha
    const double intercept = (ss - slope * st) / n;    // = log c
    TransitionFit fit;
    fit.alpha = -slope;
    fit.c = std::exp(intercept);
    fit.boundary_points = int(Ms.size());
    return fit;
}

std::vector<NoiseSweepRow> run_noise_sweep(int d, int M, const std::vector<double>& noise_levels,
                                           int trials, std::uint64_t base_seed,
                                           const SolverConfig& base, AnchorPipeline pipeline) {
    require(d >= 1 && M >= 1 && trials >= 1, "run_noise_sweep: bad dimensions");
    std::vector<NoiseSweepRow> rows;
    for (std::size_t li = 0; li < noise_levels.size(); ++li) {
        const double sigma = noise_levels[li];
        require(sigma >= 0, "run_noise_sweep: noise level must be >= 0");
        NoiseSweepRow row;
        row.sigma = sigma;
        row.trials = trials;
        std::vector<double> errs;
        double sum_mean_abs = 0, sum_eta = 0;
        for (int t = 0; t < trials; ++t) {
            const RngSpec rng{base_seed,
                              derive_stream(hash_str("noise-sweep") ^ derive_stream(li, t),
                                            std::uint64_t(t))};
            Ensemble ens = sample_rank1_complex(d, d, M, substream(rng, "ensemble"));
            Rng gen(substream(rng, "target"));
            cvec u = gen.cgaussian_vec(d).normalized();
            cvec v = gen.cgaussian_vec(d).normalized();
            cmat Xsharp = u * v.adjoint();
            NoiseSpec nspec;
            nspec.type = NoiseSpec::Type::Gaussian;
            nspec.sigma = sigma;
            rvec xi = sample_noise(nspec, M, substream(rng, "noise"));
            Observations obs = measure(ens, Xsharp, xi);

            SolverConfig cfg = base;
            cfg.mode = SolveMode::HingePenalty;
            cfg.eta = eta_budget(xi);
            Anchor anchor = pipeline == AnchorPipeline::OracleAnchor
                                ? make_anchor(cmat(u), cmat(v), AnchorMethod::Oracle)
                                : anchor_rank1(ens, obs.y);
            SolveReport rep = solve(ens, obs.y, anchor, cfg);
            errs.push_back(phase_dist(rep.Xhat, Xsharp));
            sum_mean_abs += xi.cwiseAbs().mean();
            sum_eta += cfg.eta;
            if (rep.hinge <= cfg.eta + cfg.tol_feas * (1.0 + obs.y.mean())) ++row.feasible;
        }
        row.mean_abs_xi = sum_mean_abs / trials;
        row.eta = sum_eta / trials;
        row.median_err = median(errs);
        rows.push_back(row);
    }
    return rows;
}

std::vector<InitSweepRow> run_init_accuracy(int d, const std::vector<int>& M_values, int trials,
                                            std::uint64_t base_seed) {
    require(d >= 1 && trials >= 1, "run_init_accuracy: bad dimensions");
    std::vector<InitSweepRow> rows;
    for (int M : M_values) {
        require(M >= 1, "run_init_accuracy: M must be >= 1");
        InitSweepRow row;
        row.M = M;
        row.trials = trials;
        std::vector<double> deltas;
        for (int t = 0; t < trials; ++t) {
            const RngSpec rng{base_seed, trial_stream(base_seed, M, d, t)};
            Ensemble ens = sample_rank1_complex(d, d, M, substream(rng, "ensemble"));
            Rng gen(substream(rng, "target"));
            cvec u = gen.cgaussian_vec(d).normalized();
            cvec v = gen.cgaussian_vec(d).normalized();
            cmat Xsharp = u * v.adjoint();
            Observations obs = measure(ens, Xsharp);
            Anchor anchor = anchor_rank1(ens, obs.y);
            deltas.push_back(anchor_quality(anchor, Xsharp));
        }
        row.median_delta = median(deltas);
        rows.push_back(row);
    }
    return rows;
}

std::string grid_csv(const GridResult& result) {
    std::string out = "M,d,trials,successes,success_rate,median_relerr,runtime_ms\n";
    for (std::size_t mi = 0; mi < result.M_values.size(); ++mi)
        for (std::size_t di = 0; di < result.d_values.size(); ++di) {
            const GridCell& c = result.cell(mi, di);
            out += std::to_string(c.M) + "," + std::to_string(c.d) + ","
                   + std::to_string(c.trials) + "," + std::to_string(c.successes) + ","
                   + format_double(c.success_rate) + "," + format_double(c.median_relerr) + ","
                   + format_double(c.runtime_ms) + "\n";
        }
    return out;
}

std::string noise_sweep_csv(const std::vector<NoiseSweepRow>& rows) {
    std::string out = "sigma,mean_abs_xi,eta,median_relerr,feasible,trials\n";
    for (const auto& r : rows)
        out += format_double(r.sigma) + "," + format_double(r.mean_abs_xi) + ","
               + format_double(r.eta) + "," + format_double(r.median_err) + ","
               + std::to_string(r.feasible) + "," + std::to_string(r.trials) + "\n";
    return out;
}

std::string init_sweep_csv(const std::vector<InitSweepRow>& rows) {
    std::string out = "M,median_delta,trials\n";
    for (const auto& r : rows)
        out += std::to_string(r.M) + "," + format_double(r.median_delta) + ","
               + std::to_string(r.trials) + "\n";
    return out;
}

void emit_heatmap_svg(const GridResult& result, const TransitionFit* fit,
                      const std::string& path, const std::string& meta) {
    require(!result.cells.empty(), "emit_heatmap_svg: empty grid");
    const int cw = 48, ch = 36, mleft = 64, mbottom = 48, mtop = 24, mright = 24;
    const int nm = int(result.M_values.size()), nd = int(result.d_values.size());
    const int width = mleft + nm * cw + mright;
    const int height = mtop + nd * ch + mbottom;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width)
           + "\" height=\"" + std::to_string(height) + "\">\n";
    if (!meta.empty()) svg += "  <desc>" + meta + "</desc>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\""
           + std::to_string(height) + "\" fill=\"#dddddd\"/>\n";

    // cells: M along x, d along y (largest d at the top)
    for (int mi = 0; mi < nm; ++mi)
        for (int di = 0; di < nd; ++di) {
            const GridCell& c = result.cell(mi, di);
            const int lum = int(std::lround(255.0 * std::clamp(c.success_rate, 0.0, 1.0)));
            char color[8];
            std::snprintf(color, sizeof(color), "#%02x%02x%02x", lum, lum, lum);
            const int x = mleft + mi * cw;
            const int y = mtop + (nd - 1 - di) * ch;
            svg += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y)
                   + "\" width=\"" + std::to_string(cw) + "\" height=\"" + std::to_string(ch)
                   + "\" fill=\"" + color + "\"/>\n";
        }

    // axis labels
    for (int mi = 0; mi < nm; ++mi)
        svg += "  <text x=\"" + std::to_string(mleft + mi * cw + cw / 2) + "\" y=\""
               + std::to_string(mtop + nd * ch + 18)
               + "\" font-size=\"11\" text-anchor=\"middle\">"
               + std::to_string(result.M_values[mi]) + "</text>\n";
    for (int di = 0; di < nd; ++di)
        svg += "  <text x=\"" + std::to_string(mleft - 8) + "\" y=\""
               + std::to_string(mtop + (nd - 1 - di) * ch + ch / 2 + 4)
               + "\" font-size=\"11\" text-anchor=\"end\">" + std::to_string(result.d_values[di])
               + "</text>\n";
    svg += "  <text x=\"" + std::to_string(mleft + nm * cw / 2) + "\" y=\""
           + std::to_string(height - 10) + "\" font-size=\"12\" text-anchor=\"middle\">M</text>\n";
    svg += "  <text x=\"16\" y=\"" + std::to_string(mtop + nd * ch / 2)
           + "\" font-size=\"12\" text-anchor=\"middle\">d</text>\n";

    // fitted boundary d = c M / log^alpha M mapped into cell coordinates
    if (fit && nm >= 2 && nd >= 2) {
        auto d_to_y = [&](double d) {
            // piecewise-linear position of d on the discrete axis
            const auto& dv = result.d_values;
            double pos;
            if (d <= dv.front())
                pos = 0;
            else if (d >= dv.back())
                pos = double(nd - 1);
            else {
                int j = 0;
                while (j + 1 < nd && dv[j + 1] < d) ++j;
                pos = j + (d - dv[j]) / double(dv[j + 1] - dv[j]);
            }
            return mtop + (nd - 1 - pos) * ch + ch / 2.0;
        };
        std::string pts;
        const int steps = 64;
        const double m_lo = result.M_values.front(), m_hi = result.M_values.back();
        for (int s = 0; s <= steps; ++s) {
            const double fm = double(s) / steps;
            const double Mv = m_lo + fm * (m_hi - m_lo);
            const double dstar = fit->c * Mv / std::pow(std::log(Mv), fit->alpha);
            // position M on the discrete axis the same way
            const auto& mv = result.M_values;
            double pos;
            if (Mv <= mv.front())
                pos = 0;
            else if (Mv >= mv.back())
                pos = double(nm - 1);
            else {
                int j = 0;
                while (j + 1 < nm && mv[j + 1] < Mv) ++j;
                pos = j + (Mv - mv[j]) / double(mv[j + 1] - mv[j]);
            }
            const double x = mleft + pos * cw + cw / 2.0;
            const double y = d_to_y(dstar);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x, y);
            pts += buf;
        }
        svg += "  <polyline points=\"" + pts
               + "\" fill=\"none\" stroke=\"#22aa22\" stroke-width=\"2\"/>\n";
    }
    svg += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw numeric_error("emit_heatmap_svg: cannot open " + path);
    out << svg;
    if (!out) throw numeric_error("emit_heatmap_svg: write failed for " + path);
}

} // namespace lrpr

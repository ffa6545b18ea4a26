#include "lrpr/cli.hpp"

#include "lrpr/anchor.hpp"
#include "lrpr/bench.hpp"
#include "lrpr/deconv.hpp"
#include "lrpr/metrics.hpp"
#include "lrpr/model.hpp"
#include "lrpr/numlin.hpp"
#include "lrpr/oracle.hpp"
#include "lrpr/solver.hpp"

#include <filesystem>
#include <iostream>
#include <set>

namespace lrpr::cli {

namespace fs = std::filesystem;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict schema: seed and config_version are mandatory, unknown fields rejected.
void validate_config(const json& config, const std::set<std::string>& allowed,
                     const std::set<std::string>& required) {
    if (!config.is_object()) throw usage_error("config must be a JSON object");
    if (!config.contains("config_version")) throw usage_error("config: missing field 'config_version'");
    if (config["config_version"].get<int>() != 1)
        throw usage_error("config: unsupported config_version (expected 1)");
    if (!config.contains("seed")) throw usage_error("config: missing field 'seed'");
    for (auto it = config.begin(); it != config.end(); ++it) {
        if (it.key() == "config_version" || it.key() == "seed") continue;
        if (!allowed.count(it.key()))
            throw usage_error("config: unknown field '" + it.key() + "'");
    }
    for (const auto& field : required)
        if (!config.contains(field)) throw usage_error("config: missing field '" + field + "'");
}

std::uint64_t get_seed(const json& config) { return config["seed"].get<std::uint64_t>(); }

json manifest_block(const json& config) {
    return json{{"tool_version", kToolVersion},
                {"config_hash", config_hash(config)},
                {"seed", get_seed(config)}};
}

template <typename T>
T field_or(const json& config, const char* name, T fallback) {
    return config.contains(name) ? config[name].get<T>() : fallback;
}

std::string path_in(const std::string& outdir, const std::string& name) {
    return (fs::path(outdir) / name).string();
}

NoiseSpec noise_from_config(const json& config) {
    NoiseSpec spec;
    if (!config.contains("noise")) return spec;
    const json& n = config["noise"];
    const std::string type = n.at("type").get<std::string>();
    if (type == "none") {
        spec.type = NoiseSpec::Type::Zero;
    } else if (type == "constant") {
        spec.type = NoiseSpec::Type::Constant;
        spec.value = n.at("value").get<double>();
    } else if (type == "gaussian") {
        spec.type = NoiseSpec::Type::Gaussian;
        spec.sigma = n.at("sigma").get<double>();
    } else if (type == "uniform") {
        spec.type = NoiseSpec::Type::Uniform;
        spec.lo = n.at("lo").get<double>();
        spec.hi = n.at("hi").get<double>();
    } else {
        throw usage_error("config: unknown noise type '" + type + "'");
    }
    return spec;
}

SolverConfig solver_from_config(const json& config) {
    SolverConfig cfg;
    cfg.lambda = field_or(config, "lambda", cfg.lambda);
    cfg.eta = field_or(config, "eta", cfg.eta);
    cfg.max_iter = field_or(config, "max_iter", cfg.max_iter);
    cfg.tol_rel_change = field_or(config, "tol_rel_change", cfg.tol_rel_change);
    cfg.tol_feas = field_or(config, "tol_feas", cfg.tol_feas);
    cfg.penalty_rho_init = field_or(config, "rho_init", cfg.penalty_rho_init);
    cfg.penalty_rho_growth = field_or(config, "rho_growth", cfg.penalty_rho_growth);
    cfg.step_safety = field_or(config, "step_safety", cfg.step_safety);
    if (config.contains("mode")) {
        const std::string mode = config["mode"].get<std::string>();
        if (mode == "disk-projection")
            cfg.mode = SolveMode::DiskProjection;
        else if (mode == "hinge-penalty")
            cfg.mode = SolveMode::HingePenalty;
        else
            throw usage_error("config: unknown mode '" + mode + "'");
    }
    return cfg;
}

AnchorPipeline pipeline_from_config(const json& config) {
    const std::string p = field_or<std::string>(config, "pipeline", "oracle-anchor");
    if (p == "oracle-anchor") return AnchorPipeline::OracleAnchor;
    if (p == "data-anchor") return AnchorPipeline::DataAnchor;
    throw usage_error("config: unknown pipeline '" + p + "'");
}

// Ground truth: rank-1 complex sigma u v*, or a real rank-r matrix with the
// requested condition number and unit Frobenius norm.
cmat make_target(const json& config, EnsembleKind kind, Index d1, Index d2, Index r,
                 const RngSpec& rng) {
    Rng gen(substream(rng, "target"));
    if (kind != EnsembleKind::GaussianIID) {
        const double sigma = field_or(config, "sigma", 1.0);
        cvec u = gen.cgaussian_vec(d1).normalized();
        cvec v = gen.cgaussian_vec(d2).normalized();
        return sigma * (u * v.adjoint());
    }
    const double kappa = field_or(config, "condition_number", 1.0);
    if (kappa < 1.0) throw usage_error("config: condition_number must be >= 1");
    rmat U = Eigen::HouseholderQR<rmat>(gen.gaussian_mat(d1, r)).householderQ()
             * rmat::Identity(d1, r);
    rmat V = Eigen::HouseholderQR<rmat>(gen.gaussian_mat(d2, r)).householderQ()
             * rmat::Identity(d2, r);
    rvec sv(r);
    for (Index i = 0; i < r; ++i)
        sv[i] = r == 1 ? 1.0 : kappa + (1.0 - kappa) * double(i) / double(r - 1);
    sv /= sv.norm();  // unit Frobenius norm
    return (U * sv.asDiagonal() * V.transpose()).cast<cplx>();
}

int cmd_simulate(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config,
                    {"kind", "d1", "d2", "M", "rank", "sigma", "condition_number", "noise"},
                    {"kind", "d1", "d2", "M"});
    const std::string kind = config["kind"].get<std::string>();
    const Index d1 = config["d1"].get<Index>();
    const Index d2 = config["d2"].get<Index>();
    const Index M = config["M"].get<Index>();
    if (d1 < 1) throw usage_error("config: d1 must be >= 1");
    if (d2 < 1) throw usage_error("config: d2 must be >= 1");
    if (M < 1) throw usage_error("config: M must be >= 1");
    const Index r = field_or<Index>(config, "rank", 1);
    if (r < 1 || r > std::min(d1, d2)) throw usage_error("config: rank out of range");

    const RngSpec rng{get_seed(config), hash_str("simulate")};
    Ensemble ens;
    if (kind == "rank1") {
        ens = sample_rank1_complex(d1, d2, M, substream(rng, "ensemble"));
    } else if (kind == "gaussian") {
        ens = sample_gaussian_iid(d1, d2, M, substream(rng, "ensemble"));
    } else {
        throw usage_error("config: unknown kind '" + kind + "' (expected rank1 or gaussian)");
    }
    cmat Xsharp = make_target(config, ens.kind, d1, d2, r, rng);
    rvec xi = sample_noise(noise_from_config(config), M, substream(rng, "noise"));
    Observations obs = measure(ens, Xsharp, xi);

    json jens = to_json(ens, substream(rng, "ensemble"));
    jens["manifest"] = manifest_block(config);
    json jobs = to_json(obs);
    jobs["manifest"] = manifest_block(config);
    json jtruth{{"d1", d1}, {"d2", d2}, {"rank", r}, {"Xsharp", encode_complex(Xsharp)}};
    jtruth["manifest"] = manifest_block(config);

    write_json_file(path_in(outdir, "ensemble.json"), jens);
    write_json_file(path_in(outdir, "obs.json"), jobs);
    write_json_file(path_in(outdir, "truth.json"), jtruth);
    if (!quiet)
        std::cout << "simulate: wrote ensemble.json, obs.json, truth.json (" << kind << " d1="
                  << d1 << " d2=" << d2 << " M=" << M << ")\n";
    return kExitOk;
}

cmat truth_from_json(const json& j) {
    return decode_complex_mat(j.at("Xsharp").get<std::string>(), j.at("d1").get<Index>(),
                              j.at("d2").get<Index>());
}

int cmd_anchor(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config, {"method", "rank", "ensemble", "obs", "truth", "vhat"},
                    {"method", "ensemble", "obs"});
    const std::string method = config["method"].get<std::string>();
    Ensemble ens = ensemble_from_json(read_json_file(config["ensemble"].get<std::string>()));
    Observations obs = observations_from_json(read_json_file(config["obs"].get<std::string>()));
    const Index r = field_or<Index>(config, "rank", 1);

    Anchor anchor;
    if (method == "rank1") {
        if (!ens.rank_one())
            throw usage_error("anchor: rank1 method requires a rank-1 ensemble kind");
        anchor = anchor_rank1(ens, obs.y);
    } else if (method == "naive") {
        anchor = anchor_naive_vectorized(ens, obs.y, r);
    } else if (method == "oracle") {
        if (!config.contains("truth")) throw usage_error("anchor: oracle method needs 'truth'");
        anchor = anchor_oracle(truth_from_json(read_json_file(config["truth"].get<std::string>())), r);
    } else if (method == "row-to-col" || method == "psd") {
        if (ens.kind != EnsembleKind::GaussianIID)
            throw usage_error("anchor: " + method + " method requires the gaussian ensemble");
        cmat Vhat;
        if (config.contains("vhat")) {
            const json jv = read_json_file(config["vhat"].get<std::string>());
            Vhat = decode_complex_mat(jv.at("data").get<std::string>(), jv.at("rows").get<Index>(),
                                      jv.at("cols").get<Index>());
        } else if (config.contains("truth")) {
            cmat Xs = truth_from_json(read_json_file(config["truth"].get<std::string>()));
            Vhat = svd(Xs).V.leftCols(r);  // oracle rowspace
        } else {
            throw usage_error("anchor: " + method + " method needs 'vhat' or 'truth'");
        }
        if (method == "psd") {
            anchor = anchor_psd(ens, obs.y, Vhat);
        } else {
            cmat U0 = anchor_col_from_row(ens, obs.y, Vhat);
            anchor = make_anchor(std::move(U0), std::move(Vhat), AnchorMethod::RowToCol);
        }
    } else {
        throw usage_error("anchor: unknown method '" + method + "'");
    }

    json out = to_json(anchor);
    if (config.contains("truth")) {
        cmat Xs = truth_from_json(read_json_file(config["truth"].get<std::string>()));
        out["delta"] = anchor_quality(anchor, Xs);
    }
    out["manifest"] = manifest_block(config);
    write_json_file(path_in(outdir, "anchor.json"), out);
    if (!quiet) std::cout << "anchor: wrote anchor.json (method " << method << ")\n";
    return kExitOk;
}

int cmd_solve(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config,
                    {"ensemble", "obs", "anchor", "lambda", "eta", "eta_from_noise", "mode",
                     "max_iter", "tol_rel_change", "tol_feas", "rho_init", "rho_growth",
                     "step_safety"},
                    {"ensemble", "obs", "anchor"});
    Ensemble ens = ensemble_from_json(read_json_file(config["ensemble"].get<std::string>()));
    Observations obs = observations_from_json(read_json_file(config["obs"].get<std::string>()));
    Anchor anchor = anchor_from_json(read_json_file(config["anchor"].get<std::string>()));
    SolverConfig cfg = solver_from_config(config);
    if (field_or(config, "eta_from_noise", false)) cfg.eta = eta_budget(obs.xi);

    SolveReport rep = solve(ens, obs.y, anchor, cfg);
    json out = to_json(rep);
    out["manifest"] = manifest_block(config);
    write_json_file(path_in(outdir, "report.json"), out);
    if (!quiet)
        std::cout << "solve: status " << to_string(rep.status) << " after " << rep.iterations
                  << " iterations (hinge " << rep.hinge << ")\n";
    return rep.status == SolveStatus::Converged ? kExitOk : kExitNumeric;
}

int cmd_deconv(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config,
                    {"M", "d1", "d2", "subspace", "sigma", "noise", "lambda", "mode", "eta",
                     "eta_from_noise", "max_iter", "tol_rel_change", "tol_feas", "rho_init",
                     "rho_growth", "step_safety", "signals_in"},
                    {"M", "d1", "d2"});
    const Index M = config["M"].get<Index>();
    const Index d1 = config["d1"].get<Index>();
    const Index d2 = config["d2"].get<Index>();
    if (M < 1) throw usage_error("config: M must be >= 1");
    if (d1 < 1 || d1 > M) throw usage_error("config: need 1 <= d1 <= M");
    if (d2 < 1 || d2 > M) throw usage_error("config: need 1 <= d2 <= M");

    const RngSpec rng{get_seed(config), hash_str("deconv")};
    const std::string subspace = field_or<std::string>(config, "subspace", "gaussian");
    SubspaceModel sm;
    if (subspace == "gaussian") {
        Rng gen(substream(rng, "subspace"));
        sm.D = gen.cgaussian_mat(M, d1);
        sm.E = gen.cgaussian_mat(M, d2);
    } else if (subspace == "identity") {
        if (d1 > M || d2 > M) throw usage_error("config: identity subspace needs d <= M");
        sm.D = cmat::Identity(M, d1);
        sm.E = cmat::Identity(M, d2);
    } else {
        throw usage_error("config: unknown subspace '" + subspace + "'");
    }

    cvec u, v;
    if (config.contains("signals_in")) {
        const json js = read_json_file(config["signals_in"].get<std::string>());
        u = signal_from_json(js.at("u"));
        v = signal_from_json(js.at("v"));
        if (u.size() != d1 || v.size() != d2)
            throw usage_error("config: signals_in dimensions do not match d1/d2");
    } else {
        Rng gen(substream(rng, "signals"));
        const double sigma = field_or(config, "sigma", 1.0);
        u = std::sqrt(sigma) * cvec(gen.cgaussian_vec(d1).normalized());
        v = std::sqrt(sigma) * cvec(gen.cgaussian_vec(d2).normalized());
    }

    // observed Fourier magnitudes; lifted measurements are 1/M of these
    rvec raw = forward_conv_magnitudes(sm, u, v);
    rvec xi = sample_noise(noise_from_config(config), M, substream(rng, "noise"));
    rvec y_lifted = raw / double(M) + xi;

    SolverConfig cfg = solver_from_config(config);
    if (field_or(config, "eta_from_noise", false)) cfg.eta = eta_budget(xi);
    DeconvResult res = recover_signals(sm, y_lifted, cfg);

    json out{{"factors_defined", res.factors_defined},
             {"sigma", res.sigma},
             {"u", signal_to_json(res.u)},
             {"v", signal_to_json(res.v)},
             {"u_true", signal_to_json(u)},
             {"v_true", signal_to_json(v)},
             {"report", to_json(res.report)}};
    out["manifest"] = manifest_block(config);
    write_json_file(path_in(outdir, "signals.json"), out);
    if (!quiet)
        std::cout << "deconv: status " << to_string(res.report.status) << ", sigma " << res.sigma
                  << "\n";
    return res.report.status == SolveStatus::Converged ? kExitOk : kExitNumeric;
}

int cmd_bench_pt(const json& config, const std::string& outdir, int workers, bool quiet) {
    validate_config(config,
                    {"M_values", "d_values", "trials", "success_tol", "pipeline", "lambda",
                     "max_iter", "tol_rel_change", "tol_feas", "record_runtime"},
                    {"M_values", "d_values", "trials"});
    PhaseGridSpec spec;
    spec.M_values = config["M_values"].get<std::vector<int>>();
    spec.d_values = config["d_values"].get<std::vector<int>>();
    spec.trials = config["trials"].get<int>();
    spec.success_tol = field_or(config, "success_tol", spec.success_tol);
    spec.pipeline = pipeline_from_config(config);
    spec.base_seed = get_seed(config);
    spec.solver = solver_from_config(config);
    spec.record_runtime = field_or(config, "record_runtime", false);
    spec.workers = workers;

    GridResult result = run_phase_transition(spec);
    write_text_file(path_in(outdir, "grid.csv"), grid_csv(result));

    json manifest{{"manifest", manifest_block(config)}, {"spec", config},
                  {"pipeline", to_string(spec.pipeline)}};
    TransitionFit fit;
    bool have_fit = false;
    try {
        fit = fit_transition_curve(result);
        have_fit = true;
        manifest["fit"] = json{{"c", fit.c},
                               {"alpha", fit.alpha},
                               {"boundary_points", fit.boundary_points},
                               {"log_convention", "natural"}};
    } catch (const std::exception& e) {
        manifest["fit"] = json{{"error", e.what()}};
    }
    write_json_file(path_in(outdir, "manifest.json"), manifest);
    emit_heatmap_svg(result, have_fit ? &fit : nullptr, path_in(outdir, "grid.svg"),
                     "config_hash=" + config_hash(config));
    if (!quiet)
        std::cout << "bench-pt: wrote grid.csv, grid.svg, manifest.json ("
                  << result.cells.size() << " cells)\n";
    return kExitOk;
}

int cmd_noise_sweep(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config,
                    {"d", "M", "noise_levels", "trials", "pipeline", "lambda", "max_iter",
                     "tol_rel_change", "tol_feas"},
                    {"d", "M", "noise_levels", "trials"});
    auto rows = run_noise_sweep(config["d"].get<int>(), config["M"].get<int>(),
                                config["noise_levels"].get<std::vector<double>>(),
                                config["trials"].get<int>(), get_seed(config),
                                solver_from_config(config), pipeline_from_config(config));
    write_text_file(path_in(outdir, "noise_sweep.csv"), noise_sweep_csv(rows));
    write_json_file(path_in(outdir, "manifest.json"),
                    json{{"manifest", manifest_block(config)}, {"spec", config}});
    if (!quiet) std::cout << "noise-sweep: wrote noise_sweep.csv (" << rows.size() << " levels)\n";
    return kExitOk;
}

int cmd_init_sweep(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config, {"d", "M_values", "trials"}, {"d", "M_values", "trials"});
    auto rows = run_init_accuracy(config["d"].get<int>(),
                                  config["M_values"].get<std::vector<int>>(),
                                  config["trials"].get<int>(), get_seed(config));
    write_text_file(path_in(outdir, "init_sweep.csv"), init_sweep_csv(rows));
    write_json_file(path_in(outdir, "manifest.json"),
                    json{{"manifest", manifest_block(config)}, {"spec", config}});
    if (!quiet) std::cout << "init-sweep: wrote init_sweep.csv (" << rows.size() << " rows)\n";
    return kExitOk;
}

int cmd_verify_moments(const json& config, const std::string& outdir, bool quiet) {
    validate_config(config, {"scale"}, {});
    const double scale = field_or(config, "scale", 1.0);
    if (scale <= 0) throw usage_error("config: scale must be positive");
    const std::uint64_t seed = get_seed(config);
    auto n = [&](double base) { return long(base * scale); };

    json checks = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, double metric, double tolerance, bool pass,
                      long samples) {
        checks.push_back(json{{"name", name},
                              {"metric", metric},
                              {"tolerance", tolerance},
                              {"pass", pass},
                              {"samples", samples}});
        all_pass = all_pass && pass;
        if (!quiet)
            std::cout << (pass ? "  pass  " : "  FAIL  ") << name << "  metric " << metric
                      << "  tol " << tolerance << "\n";
    };

    {
        auto rep = fourth_moment_check(2, n(5e5), {seed, derive_stream("vm/fourth", 0)});
        record(rep.name, rep.max_abs_err, oracle_tol::fourth_moment,
               rep.max_abs_err <= oracle_tol::fourth_moment, rep.samples);
    }
    {
        Rng gen({seed, derive_stream("vm/quad-xy", 0)});
        rvec x = gen.gaussian_vec(4).normalized();
        rvec y = gen.gaussian_vec(4).normalized();
        auto rep = quad_form_check(x, y, n(2e5), {seed, derive_stream("vm/quad", 0)});
        record(rep.name, rep.max_abs_err, oracle_tol::quad_form,
               rep.max_abs_err <= oracle_tol::quad_form, rep.samples);
    }
    {
        Rng gen({seed, derive_stream("vm/octa-x", 0)});
        rvec x = gen.gaussian_vec(2).normalized();
        auto rep = octa_moment_check(x, n(1e6), {seed, derive_stream("vm/octa", 0)});
        record(rep.name, rep.max_abs_err, oracle_tol::octa_moment,
               rep.max_abs_err <= oracle_tol::octa_moment, rep.samples);
    }
    {
        auto rep = complex_moment_check(n(1e6), {seed, derive_stream("vm/complex", 0)});
        for (int k = 0; k < 4; ++k) {
            const double rel = std::abs(rep.empirical[k] - rep.analytic[k]) / rep.analytic[k];
            record("complex_moment_" + std::to_string(2 * (k + 1)), rel,
                   oracle_tol::complex_rel[k], rel <= oracle_tol::complex_rel[k], rep.samples);
        }
    }
    {
        Rng gen({seed, derive_stream("vm/ups1-uv", 0)});
        cvec u = gen.cgaussian_vec(8).normalized();
        cvec v = gen.cgaussian_vec(8).normalized();
        auto rep = expected_upsilon_rank1_check(u, v, 1.0, 0.5, 8, n(2e5),
                                                {seed, derive_stream("vm/ups1", 0)});
        record(rep.name, rep.rel_fro_err, oracle_tol::upsilon_rel,
               rep.rel_fro_err <= oracle_tol::upsilon_rel, rep.samples);
    }
    {
        Rng gen({seed, derive_stream("vm/upsr-x", 0)});
        rmat U = Eigen::HouseholderQR<rmat>(gen.gaussian_mat(8, 2)).householderQ()
                 * rmat::Identity(8, 2);
        rmat V = Eigen::HouseholderQR<rmat>(gen.gaussian_mat(8, 2)).householderQ()
                 * rmat::Identity(8, 2);
        rvec sv(2);
        sv << 0.8, 0.6;
        rmat Xs = U * sv.asDiagonal() * V.transpose();
        auto rep = expected_upsilon_rankr_check(Xs, V, 0.25, n(2e5),
                                                {seed, derive_stream("vm/upsr", 0)});
        record(rep.name, rep.rel_fro_err, oracle_tol::upsilon_rel,
               rep.rel_fro_err <= oracle_tol::upsilon_rel, rep.samples);
    }
    {
        const double rhos[] = {0.0, 0.5, 1.0};
        const double ts[] = {0.25, 1.0};
        int idx = 0;
        for (double rho : rhos)
            for (double t : ts) {
                auto rep = gauss_product_tail_check(rho, t, n(2e5),
                                                    {seed, derive_stream("vm/tail", idx)});
                record("gauss_product_tail_" + std::to_string(idx), rep.empirical - rep.bound,
                       -3.0 * rep.std_error, rep.pass, rep.samples);
                ++idx;
            }
    }
    {
        Rng gen({seed, derive_stream("vm/dk", 0)});
        int held = 0, applicable = 0;
        const int instances = 25;
        for (int i = 0; i < instances; ++i) {
            const Index nmat = 6, r = 2;
            cmat Q = svd(cmat(gen.cgaussian_mat(nmat, nmat))).U;
            rvec evals(nmat);
            for (Index k = 0; k < nmat; ++k) evals[k] = double(nmat - k) + (k < r ? 2.0 : 0.0);
            cmat A = Q * evals.asDiagonal().toDenseMatrix().cast<cplx>() * Q.adjoint();
            A = ((A + A.adjoint()) / 2.0).eval();
            cmat D = gen.cgaussian_mat(nmat, nmat);
            D = ((D + D.adjoint()) / 2.0).eval();
            const double gap = evals[r - 1] - evals[r];
            D *= (gap / 6.0) / Eigen::JacobiSVD<cmat>(D).singularValues()(0);
            auto rep = davis_kahan_check(A, D, r);
            if (!rep.skipped && rep.precondition_holds) {
                ++applicable;
                if (rep.bound_holds) ++held;
            }
        }
        record("davis_kahan", double(held), double(applicable),
               applicable > 0 && held == applicable, instances);
    }

    json out{{"all_pass", all_pass}, {"checks", checks}};
    out["manifest"] = manifest_block(config);
    write_json_file(path_in(outdir, "moments.json"), out);
    if (!quiet) std::cout << "verify-moments: " << (all_pass ? "all checks passed" : "FAILURES") << "\n";
    return all_pass ? kExitOk : kExitNumeric;
}

} // namespace

int run_command(const std::string& command, const json& config, const std::string& outdir,
                int workers, bool quiet) {
    try {
        fs::create_directories(outdir);
        if (command == "simulate") return cmd_simulate(config, outdir, quiet);
        if (command == "anchor") return cmd_anchor(config, outdir, quiet);
        if (command == "solve") return cmd_solve(config, outdir, quiet);
        if (command == "deconv") return cmd_deconv(config, outdir, quiet);
        if (command == "bench-pt") return cmd_bench_pt(config, outdir, workers, quiet);
        if (command == "noise-sweep") return cmd_noise_sweep(config, outdir, quiet);
        if (command == "init-sweep") return cmd_init_sweep(config, outdir, quiet);
        if (command == "verify-moments") return cmd_verify_moments(config, outdir, quiet);
        std::cerr << "error: unknown command '" << command << "'\n";
        return kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

} // namespace lrpr::cli

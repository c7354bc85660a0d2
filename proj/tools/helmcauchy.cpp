// Command-line harness: one subcommand per reproducible artifact.
//
// Exit codes: 0 success, 2 parameter error, 3 numerical validity error
// (overflow / non-convergence / bad data), 4 I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helm/csv.hpp"
#include "helm/experiments.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;  // key=value pairs from flags
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "flat key = value config file");
    cmd->add_option("--set", opts.overrides, "override config entries (key=value)")
        ->expected(-1);
}

// flag conveniences that map straight onto config keys
void add_knobs(CLI::App* cmd, CommonOpts& opts) {
    auto push = [&opts](const std::string& key) {
        return [&opts, key](const std::string& v) { opts.overrides.push_back(key + "=" + v); };
    };
    cmd->add_option_function<std::string>("--delta", push("deltas"),
                                          "comma-separated noise levels");
    cmd->add_option_function<std::string>("--z0", push("z0s"), "comma-separated depths");
    cmd->add_option_function<std::string>("--out", push("out_dir"), "output directory");
    cmd->add_option_function<std::string>("--spacing-divisor", push("spacing_divisor"),
                                          "grid divisor (window radius / spacing)");
    cmd->add_option_function<std::string>("--quad-order", push("quad_order"),
                                          "Gauss-Legendre order");
    cmd->add_option_function<std::string>("--volterra-steps", push("volterra_steps"),
                                          "marching steps M");
}

helm::RunConfig build_config(const CommonOpts& opts, const helm::RunConfig& defaults) {
    helm::RunConfig cfg = defaults;
    if (!opts.config_path.empty()) cfg = helm::load_config(opts.config_path);
    for (const std::string& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw helm::parameter_error("override '" + kv + "' is not key=value");
        helm::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw helm::io_error("cannot create output directory '" + cfg.out_dir + "'");
    return cfg;
}

helm::RunConfig example2_defaults() {
    helm::RunConfig cfg;
    cfg.d = std::numbers::pi / std::sqrt(3.0);
    cfg.k = std::sqrt(5.0);
    cfg.deltas = {1e-3, 1e-5, 1e-7, 1e-9};
    cfg.z0s = {1.45, 1.08, 0.90, 0.36};
    return cfg;
}

void print_report(const helm::ErrorReport& rep) {
    std::printf("delta");
    for (double z0 : rep.z0_labels) std::printf("  E(%g)", z0);
    std::printf("\n");
    for (const auto& row : rep.rows) {
        std::printf("%.1E", row.delta);
        for (double z0 : rep.z0_labels) std::printf("  %.8E", row.e_of_z0.at(z0));
        std::printf("\n");
    }
}

int run_table_cmd(const CommonOpts& opts, const helm::RunConfig& defaults, int which) {
    const helm::RunConfig cfg = build_config(opts, defaults);
    const std::string name = "table" + std::to_string(which);
    helm::ErrorReport rep = which == 1   ? helm::run_table1(cfg)
                            : which == 2 ? helm::run_table2(cfg)
                                         : helm::run_table3(cfg);
    print_report(rep);
    helm::write_report_csv(rep, cfg.out_dir + "/" + name + ".csv");
    helm::write_manifest(cfg, name, cfg.out_dir + "/manifest_" + name + ".txt");
    return 0;
}

int run_blowup_cmd(const CommonOpts& opts) {
    const helm::RunConfig cfg = build_config(opts, helm::RunConfig{});
    helm::BlowupReport rep = helm::run_blowup(cfg);
    std::printf("n  ||g||^2  ||u(.,0)||^2  lower_bound\n");
    for (const auto& r : rep.rows)
        std::printf("%d  %.8E  %.8E  %.8E\n", r.n, r.g_norm_sq, r.u0_norm_sq, r.lower_bound);
    helm::write_blowup_csv(rep, cfg.out_dir + "/blowup.csv");
    helm::write_manifest(cfg, "blowup", cfg.out_dir + "/manifest_blowup.txt");
    return 0;
}

int run_figure_cmd(const CommonOpts& opts) {
    const helm::RunConfig cfg = build_config(opts, helm::RunConfig{});
    const helm::GaussRule rule = helm::legendre_rule(cfg.quad_order);
    helm::Example1Cell cell = helm::make_example1_cell(cfg, cfg.fig_delta, {cfg.fig_z0});
    const helm::SpectralField reg =
        helm::regularized_uhat(cell.noisy, *cell.grid, cell.params, cell.reg, rule);
    helm::emit_figure_data(*cell.exact, cfg.fig_z0, cfg.out_dir + "/figure_exact.csv");
    helm::emit_figure_data(reg, cfg.fig_z0, cfg.out_dir + "/figure_regularized.csv");
    helm::write_manifest(cfg, "figure", cfg.out_dir + "/manifest_figure.txt");
    std::printf("wrote %s/figure_exact.csv and %s/figure_regularized.csv (%zu modes)\n",
                cfg.out_dir.c_str(), cfg.out_dir.c_str(), cell.grid->n_modes());
    return 0;
}

struct BoundsOpts {
    double delta = 1e-3;
    std::string rule = "apriori";
    int z_steps = 50;
    double Q = 1.0;
    double L_f = 0.0;
    bool with_thm17 = false;
};

int run_bounds_cmd(const CommonOpts& opts, const BoundsOpts& bopts) {
    const helm::RunConfig cfg = build_config(opts, helm::RunConfig{});
    const helm::WaveParams params(cfg.k, cfg.d);
    helm::RegParams reg = bopts.rule == "apriori"
                              ? helm::eps_apriori(bopts.delta, cfg.M0, params)
                              : helm::eps_logrule(bopts.delta, params);

    std::vector<double> zs;
    for (int i = 1; i <= bopts.z_steps; ++i) zs.push_back(cfg.d * i / bopts.z_steps);
    const helm::BoundReport rep = helm::bound_report(zs, reg, params, cfg.M0);

    std::vector<std::string> header{"z", "m1"};
    if (!rep.thm11_bound.empty()) header.push_back("thm11");
    if (!rep.thm13_bound.empty()) header.push_back("thm13");
    if (bopts.with_thm17) header.push_back("thm17");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        std::vector<std::string> row{helm::fmt_full(zs[i]), helm::fmt_table(rep.m1_of_z[i])};
        if (!rep.thm11_bound.empty()) row.push_back(helm::fmt_table(rep.thm11_bound[i]));
        if (!rep.thm13_bound.empty()) row.push_back(helm::fmt_table(rep.thm13_bound[i]));
        if (bopts.with_thm17)
            row.push_back(helm::fmt_table(helm::thm17_error_bound(
                zs[i], bopts.delta, bopts.Q, bopts.L_f + params.k2(), params)));
        rows.push_back(std::move(row));
    }
    helm::write_csv(cfg.out_dir + "/bounds.csv", header, rows);
    helm::write_manifest(cfg, "bounds", cfg.out_dir + "/manifest_bounds.txt");
    std::printf("wrote %s/bounds.csv (theta area %.8E)\n", cfg.out_dir.c_str(),
                rep.theta_area);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral-cutoff regularization toolkit for the slab Cauchy problem"};
    app.require_subcommand(1);

    CommonOpts t1, t2, t3, bl, fig, bnd;
    auto* cmd1 = app.add_subcommand("table1", "truncation-method error table");
    add_common(cmd1, t1);
    add_knobs(cmd1, t1);
    auto* cmd2 = app.add_subcommand("table2", "quasi-boundary comparison table");
    add_common(cmd2, t2);
    add_knobs(cmd2, t2);
    auto* cmd3 = app.add_subcommand("table3", "nonlinear (Volterra) error table");
    add_common(cmd3, t3);
    add_knobs(cmd3, t3);
    auto* cmdb = app.add_subcommand("blowup", "ill-posedness blow-up demonstration");
    add_common(cmdb, bl);
    cmdb->add_option_function<std::string>(
        "--n", [&bl](const std::string& v) { bl.overrides.push_back("blowup_ns=" + v); },
        "comma-separated family indices");
    cmdb->add_option_function<std::string>(
        "--out", [&bl](const std::string& v) { bl.overrides.push_back("out_dir=" + v); },
        "output directory");
    auto* cmdf = app.add_subcommand("figure", "emit |u| figure data for one (delta, z0)");
    add_common(cmdf, fig);
    cmdf->add_option_function<std::string>(
        "--delta", [&fig](const std::string& v) { fig.overrides.push_back("fig_delta=" + v); },
        "noise level");
    cmdf->add_option_function<std::string>(
        "--z0", [&fig](const std::string& v) { fig.overrides.push_back("fig_z0=" + v); },
        "depth");
    cmdf->add_option_function<std::string>(
        "--out", [&fig](const std::string& v) { fig.overrides.push_back("out_dir=" + v); },
        "output directory");

    BoundsOpts bopts;
    auto* cmdn = app.add_subcommand("bounds", "evaluate the error/stability bounds");
    add_common(cmdn, bnd);
    cmdn->add_option("--delta", bopts.delta, "noise level");
    cmdn->add_option("--rule", bopts.rule, "apriori|logrule")
        ->check(CLI::IsMember({"apriori", "logrule"}));
    cmdn->add_option("--z-steps", bopts.z_steps, "depth samples");
    cmdn->add_option("--Q", bopts.Q, "nonlinear a-priori constant");
    cmdn->add_option("--Lf", bopts.L_f, "Lipschitz constant of f");
    cmdn->add_flag("--thm17", bopts.with_thm17, "include the nonlinear bound column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean, bad flags are parameter errors
    }

    try {
        if (cmd1->parsed()) return run_table_cmd(t1, helm::RunConfig{}, 1);
        if (cmd2->parsed()) return run_table_cmd(t2, helm::RunConfig{}, 2);
        if (cmd3->parsed()) return run_table_cmd(t3, example2_defaults(), 3);
        if (cmdb->parsed()) return run_blowup_cmd(bl);
        if (cmdf->parsed()) return run_figure_cmd(fig);
        if (cmdn->parsed()) return run_bounds_cmd(bnd, bopts);
    } catch (const helm::parameter_error& e) {
        std::fprintf(stderr, "parameter error: %s\n", e.what());
        return 2;
    } catch (const helm::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    }
    return 0;
}

#include "helm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "helm/csv.hpp"
#include "helm/fourier.hpp"

namespace helm {

namespace {

void require_close(double got, double want, const char* what) {
    if (std::abs(got - want) > 1e-9 * std::max(1.0, std::abs(want)))
        throw parameter_error(std::string("config: ") + what + " must equal " +
                              fmt_full(want) + " for this runner (got " + fmt_full(got) + ")");
}

std::vector<double> sorted_unique(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// depth profile of the box example's forcing spectrum:
// f(x,y,s) = -x y (s-1/2)^2 (12 + (1/9)(s-1/2)^2)
double example1_profile(double s) {
    const double sig = s - 0.5;
    return -(sig * sig) * (12.0 + sig * sig / 9.0);
}

// paper-style cutoff for any delta != M0 (a-priori rule where its hypothesis
// holds, same formula as a manual rule otherwise)
RegParams example1_reg(double delta, double M0, const WaveParams& params) {
    if (delta > 0.0 && delta < M0) return eps_apriori(delta, M0, params);
    const double logs = std::log(delta / M0);
    if (logs == 0.0)
        throw parameter_error("example1_reg: delta == M0 leaves the cutoff undefined");
    const double kappa2 = logs * logs / (params.d() * params.d());
    return eps_manual(delta, 1.0 / (params.k2() + kappa2), params);
}

} // namespace

Example1Cell make_example1_cell(const RunConfig& cfg, double delta,
                                std::vector<double> z_samples) {
    require_close(cfg.k, 1.0 / 3.0, "k");
    require_close(cfg.d, 0.5, "d");
    require_close(cfg.M0, 1.0 / 48.0, "M0");
    if (!(delta > 0.0)) throw parameter_error("make_example1_cell: delta must be positive");

    Example1Cell cell{WaveParams(cfg.k, cfg.d), example1_reg(delta, cfg.M0, WaveParams(cfg.k, cfg.d)),
                      nullptr, {}, {}, nullptr};
    const double radius = std::sqrt(cell.reg.cutoff());
    cell.grid = std::make_unique<ModeGrid>(ModeGrid::square_window(
        radius, cfg.spacing_divisor, sorted_unique(std::move(z_samples)), cell.params));
    const ModeGrid& grid = *cell.grid;

    // separable axis coefficients, one pass over the distinct axis values
    const int div = cfg.spacing_divisor;
    const double h = grid.spacing();
    std::vector<cxd> D(2 * div + 1), X(2 * div + 1);
    for (int i = -div; i <= div; ++i) {
        D[i + div] = fourier_axis_coeff([](double) { return 1.0; }, 1.0, i * h,
                                        cfg.quad_order);
        X[i + div] = fourier_axis_coeff([](double x) { return x; }, 1.0, i * h,
                                        cfg.quad_order);
    }
    auto axis_index = [&](double t) {
        return static_cast<std::size_t>(std::lround(t / h)) + div;
    };

    auto box_hat = std::make_shared<std::vector<cxd>>(grid.n_modes());
    auto xy_hat = std::make_shared<std::vector<cxd>>(grid.n_modes());
    for (std::size_t m = 0; m < grid.n_modes(); ++m) {
        const Vec2& p = grid.rho(m);
        (*box_hat)[m] = D[axis_index(p[0])] * D[axis_index(p[1])];
        (*xy_hat)[m] = X[axis_index(p[0])] * X[axis_index(p[1])];
    }

    CauchyData clean;
    clean.g_hat.assign(grid.n_modes(), cxd{});
    clean.f_hat = [xy_hat](std::size_t m, double s) {
        return example1_profile(s) * (*xy_hat)[m];
    };
    NoiseModel model{NoiseKind::example1_deterministic, delta, 0.3167506677};
    cell.noisy = apply_example1_noise(model, clean, *box_hat);

    for (std::size_t m = 0; m < grid.n_modes(); ++m)
        if (grid.region(m) == Region::A1 && grid.rho_norm2(m) <= cell.reg.cutoff())
            cell.window.push_back(m);

    cell.exact = std::make_unique<SpectralField>(grid);
    for (std::size_t m = 0; m < grid.n_modes(); ++m) {
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
            const double zf = std::pow(grid.z(j) - 0.5, 4);
            cell.exact->at(m, j) = zf * (*xy_hat)[m];
        }
    }
    return cell;
}

namespace {

ErrorReport run_example1_table(const RunConfig& cfg, bool quasi_boundary) {
    if (cfg.deltas.empty() || cfg.z0s.empty())
        throw parameter_error("run_table: empty delta or z0 list");
    const GaussRule rule = legendre_rule(cfg.quad_order);

    ErrorReport rep;
    rep.method = quasi_boundary ? "xiong" : "truncation";
    rep.config_hash = fnv1a64(config_echo(cfg));
    rep.z0_labels = cfg.z0s;
    for (double delta : cfg.deltas) {
        Example1Cell cell = make_example1_cell(cfg, delta, cfg.z0s);
        SpectralField approx = [&] {
            if (!quasi_boundary)
                return regularized_uhat(cell.noisy, *cell.grid, cell.params, cell.reg, rule);
            QuasiBoundaryParams qb;
            qb.alpha = delta / cfg.M0;
            qb.reg = cell.reg;
            return xiong_uhat(cell.noisy, *cell.grid, cell.params, qb, rule);
        }();
        ErrorRow row;
        row.delta = delta;
        for (double z0 : cfg.z0s)
            row.e_of_z0[z0] = error_E(*cell.exact, approx, z0, cell.window);
        rep.rows.push_back(std::move(row));
    }
    rep.sort_rows();
    return rep;
}

} // namespace

ErrorReport run_table1(const RunConfig& cfg) { return run_example1_table(cfg, false); }

ErrorReport run_table2(const RunConfig& cfg) { return run_example1_table(cfg, true); }

Example2Cell make_example2_cell(const RunConfig& cfg, double delta) {
    require_close(cfg.d, std::numbers::pi / std::sqrt(3.0), "d");
    require_close(cfg.k, std::sqrt(5.0), "k");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw parameter_error("make_example2_cell: delta must lie in (0, 1)");

    Example2Cell cell{WaveParams(cfg.k, cfg.d), {}, nullptr, {}, nullptr, nullptr};
    cell.setup = thm17_setup(delta, cell.params);
    cell.setup.volterra_steps = cfg.volterra_steps;

    const double radius = std::sqrt(cell.setup.reg.cutoff());
    cell.grid = std::make_unique<ModeGrid>(ModeGrid::square_window(
        radius, cfg.spacing_divisor,
        volterra_partition(cfg.volterra_steps, cell.params), cell.params));
    const ModeGrid& grid = *cell.grid;

    for (std::size_t m = 0; m < grid.n_modes(); ++m)
        if (grid.rho_norm2(m) <= cell.setup.reg.cutoff()) cell.window.push_back(m);

    const WaveParams params = cell.params;
    auto rhat = [&grid, params](std::size_t m, double z) {
        return example2_rhat(grid.rho(m), z, params);
    };
    cell.march = std::make_unique<SpectralField>(
        volterra_march(rhat, cell.setup, grid, params));

    const double pi = std::numbers::pi;
    cell.exact = std::make_unique<SpectralField>(grid);
    for (std::size_t m = 0; m < grid.n_modes(); ++m) {
        const double amp = 2.0 * pi * std::exp(-2.0 * pi * pi * grid.rho_norm2(m));
        for (std::size_t j = 0; j < grid.n_z(); ++j)
            cell.exact->at(m, j) = amp * std::cos(grid.z(j) * pi / cfg.d);
    }
    return cell;
}

ErrorReport run_table3(const RunConfig& cfg) {
    if (cfg.deltas.empty() || cfg.z0s.empty())
        throw parameter_error("run_table3: empty delta or z0 list");

    ErrorReport rep;
    rep.method = "volterra";
    rep.config_hash = fnv1a64(config_echo(cfg));
    rep.z0_labels = cfg.z0s;
    for (double delta : cfg.deltas) {
        Example2Cell cell = make_example2_cell(cfg, delta);
        const ModeGrid& grid = *cell.grid;
        ErrorRow row;
        row.delta = delta;
        for (double z0 : cfg.z0s) {
            // nearest marching node carries the label z0
            const double step = cfg.d / cfg.volterra_steps;
            const long i = std::clamp<long>(std::lround(z0 / step), 0, cfg.volterra_steps);
            row.e_of_z0[z0] =
                error_E(*cell.exact, *cell.march, grid.z(static_cast<std::size_t>(i)),
                        cell.window);
        }
        rep.rows.push_back(std::move(row));
    }
    rep.sort_rows();
    return rep;
}

BlowupReport run_blowup(const RunConfig& cfg) {
    BlowupReport rep;
    rep.config_hash = fnv1a64(config_echo(cfg));
    const WaveParams params(cfg.k, cfg.d);
    rep.rows = demo_blowup(cfg.blowup_ns, cfg.blowup_cells, params,
                           legendre_rule(cfg.quad_order));
    return rep;
}

void emit_figure_data(const SpectralField& field, double z0, const std::string& path) {
    const ModeGrid& grid = field.grid();
    const std::size_t zi = grid.z_index_of(z0);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(grid.n_modes());
    for (std::size_t m = 0; m < grid.n_modes(); ++m) {
        const Vec2& p = grid.rho(m);
        rows.push_back({fmt_full(p[0]), fmt_full(p[1]), fmt_full(std::abs(field.at(m, zi)))});
    }
    write_csv(path, {"rho1", "rho2", "modulus"}, rows);
}

void write_report_csv(const ErrorReport& rep, const std::string& path) {
    std::vector<std::string> header{"delta"};
    for (double z0 : rep.z0_labels) {
        char label[32];
        std::snprintf(label, sizeof label, "E(%g)", z0);
        header.push_back(label);
    }
    std::vector<std::vector<std::string>> rows;
    for (const ErrorRow& row : rep.rows) {
        std::vector<std::string> out{fmt_table(row.delta)};
        for (double z0 : rep.z0_labels) out.push_back(fmt_table(row.e_of_z0.at(z0)));
        rows.push_back(std::move(out));
    }
    write_csv(path, header, rows);
}

void write_blowup_csv(const BlowupReport& rep, const std::string& path) {
    std::vector<std::vector<std::string>> rows;
    for (const BlowupRow& r : rep.rows) {
        rows.push_back({std::to_string(r.n), fmt_table(r.g_norm_sq), fmt_table(r.u0_norm_sq),
                        fmt_table(r.lower_bound), fmt_table(r.log_u0_norm_sq)});
    }
    write_csv(path, {"n", "g_norm_sq", "u0_norm_sq", "lower_bound", "log_u0_norm_sq"}, rows);
}

void write_manifest(const RunConfig& cfg, const std::string& subcommand,
                    const std::string& path) {
    const std::string echo = config_echo(cfg);
    std::string text = "subcommand = " + subcommand + "\n" + echo +
                       "config_hash = " + std::to_string(fnv1a64(echo)) + "\n";
    write_text(path, text);
}

} // namespace helm

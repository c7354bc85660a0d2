#include "helm/illposedness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helm/analytic.hpp"
#include "helm/fourier.hpp"
#include "helm/special.hpp"

namespace helm {

namespace {

double log_sum_exp(const std::vector<double>& logs) {
    const double m = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - m);
    return m + std::log(acc);
}

} // namespace

BlowupFamily::BlowupFamily(int n_, const WaveParams& params_)
    : n(n_), params(params_) {
    if (n < 2) throw parameter_error("BlowupFamily: n must be >= 2");
    window_lo = n + params.k() + 1.0;
    window_width = 1.0 / n;
    g_amp = std::sqrt(static_cast<double>(n));
    f_amp = g_amp / params.d();
}

FamilyNorms family_norms(const BlowupFamily& fam, int cells_per_axis) {
    FamilyNorms out;
    out.g_sq_exact = 1.0 / fam.n;
    out.f_sq_exact = 1.0 / (fam.n * fam.params.d() * fam.params.d());
    // constant integrand: the cell-centered Riemann sum is the area times the
    // squared amplitude
    const double h = fam.window_width / cells_per_axis;
    const double cells = static_cast<double>(cells_per_axis) * cells_per_axis;
    out.g_sq_discrete = h * h * cells * fam.g_amp * fam.g_amp;
    out.f_sq_discrete = h * h * cells * fam.f_amp * fam.f_amp;
    return out;
}

double blowup_lower_bound(const BlowupFamily& fam) {
    const double n = fam.n;
    const double d = fam.params.d();
    const double k = fam.params.k();
    return (n * n - 1.0) / (2.0 * (n * n + 1.0)) * std::exp(2.0 * d * n)
           / (4.0 * n * std::exp(2.0 * k * d));
}

std::vector<BlowupRow> demo_blowup(const std::vector<int>& n_list, int cells_per_axis,
                                   const WaveParams& params, const GaussRule& rule) {
    std::vector<BlowupRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        if (2.0 * params.d() * n >= 700.0)
            throw validity_error("demo_blowup: 2*d*n = " +
                                 std::to_string(2.0 * params.d() * n) +
                                 " exceeds the double exponent budget; use a smaller n "
                                 "or blowup_log_norm_sq");
        BlowupFamily fam(n, params);
        ModeGrid grid = ModeGrid::cell_centered_window(
            fam.window_lo, fam.window_width, cells_per_axis, {0.0}, params);

        CauchyData data;
        data.g_hat.assign(grid.n_modes(), cxd(fam.g_amp, 0.0));
        const double f_amp = fam.f_amp;
        data.f_hat = [f_amp](std::size_t, double) { return cxd(f_amp, 0.0); };

        const SpectralField u0 = exact_uhat(data, grid, params, rule);
        const double norm = parseval_norm(u0, 0);
        const double norm_sq = norm * norm;
        if (!std::isfinite(norm_sq))
            throw validity_error("demo_blowup: ||u_n(.,0)||^2 overflowed at n = " +
                                 std::to_string(n) + "; use blowup_log_norm_sq");

        BlowupRow row;
        row.n = n;
        row.g_norm_sq = family_norms(fam, cells_per_axis).g_sq_discrete;
        row.u0_norm_sq = norm_sq;
        row.lower_bound = blowup_lower_bound(fam);
        row.log_u0_norm_sq = std::log(norm_sq);
        if (!(row.u0_norm_sq > row.lower_bound))
            throw validity_error("demo_blowup: solution norm failed to exceed the "
                                 "lower bound at n = " + std::to_string(n));
        rows.push_back(row);
    }
    return rows;
}

double blowup_log_norm_sq(const BlowupFamily& fam, int cells_per_axis) {
    const double h = fam.window_width / cells_per_axis;
    const double d = fam.params.d();
    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(cells_per_axis) * cells_per_axis);
    for (int i = 0; i < cells_per_axis; ++i) {
        for (int j = 0; j < cells_per_axis; ++j) {
            const double r1 = fam.window_lo + (i + 0.5) * h;
            const double r2 = fam.window_lo + (j + 0.5) * h;
            const double lam = r1 * r1 + r2 * r2 - fam.params.k2();
            const double a = std::sqrt(lam);
            // u/amp = cosh(da)(1 - 1/(d lam)) + 1/(d lam), log-stable for large da
            const double c = 1.0 / (d * lam);
            const double log_u =
                d * a + std::log((1.0 + std::exp(-2.0 * d * a)) / 2.0 * (1.0 - c) +
                                 std::exp(-d * a) * c);
            logs.push_back(2.0 * (log_u + std::log(fam.g_amp)));
        }
    }
    return 2.0 * std::log(h) + log_sum_exp(logs);
}

} // namespace helm

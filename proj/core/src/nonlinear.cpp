#include "helm/nonlinear.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "helm/fourier.hpp"
#include "helm/special.hpp"

namespace helm {

LipschitzForcing affine_forcing(const WaveParams& params,
                                std::function<cxd(std::size_t, double)> source) {
    LipschitzForcing f;
    const double k2 = params.k2();
    f.L_f = 0.0;  // f(u) part is u-independent
    f.eval = [k2, source = std::move(source)](std::span<const cxd> w, double s,
                                              std::span<cxd> out) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            out[i] = -k2 * w[i];
            if (source) out[i] += source(i, s);
        }
    };
    return f;
}

NonlinearRegSetup thm17_setup(double delta, const WaveParams& params) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw parameter_error("thm17_setup: requires 0 < delta < 1");
    const double d = params.d();
    const double logs = std::log(1.0 / delta);
    NonlinearRegSetup setup;
    setup.reg = eps_manual(delta, d * d / (logs * logs), params);
    setup.thm17_rule = true;
    return setup;
}

namespace {

// lambda_0 = |rho|^2: the operator works with k folded into F
double lambda0(const ModeGrid& grid, std::size_t i) { return grid.rho_norm2(i); }

// cubic Lagrange weights for evaluating at s from 4 consecutive z nodes
struct InterpStencil {
    std::size_t base;  // first node index
    double w[4];
};

InterpStencil cubic_stencil(const std::vector<double>& z, std::size_t panel, double s) {
    const std::size_t n = z.size();
    std::size_t j0 = panel == 0 ? 0 : panel - 1;
    if (j0 + 3 >= n) j0 = n - 4;
    InterpStencil st;
    st.base = j0;
    for (int p = 0; p < 4; ++p) {
        double L = 1.0;
        for (int q = 0; q < 4; ++q) {
            if (q == p) continue;
            L *= (s - z[j0 + q]) / (z[j0 + p] - z[j0 + q]);
        }
        st.w[p] = L;
    }
    return st;
}

} // namespace

SpectralField apply_G(const SpectralField& w, const CauchyData& data,
                      const NonlinearRegSetup& setup, const LipschitzForcing& forcing,
                      const ModeGrid& grid, const WaveParams& params,
                      const GaussRule& rule) {
    data.check_size(grid, "apply_G");
    if (!forcing.eval) throw parameter_error("apply_G: forcing.eval is not set");
    const std::size_t nm = grid.n_modes();
    const std::size_t nz = grid.n_z();
    if (nz < 4) throw parameter_error("apply_G: needs at least 4 z samples");
    const std::vector<double>& z = grid.z_samples();
    const double d = params.d();
    const double cut = setup.reg.cutoff();

    std::vector<char> inside(nm);
    for (std::size_t i = 0; i < nm; ++i) inside[i] = grid.rho_norm2(i) <= cut ? 1 : 0;

    // boundary-data part
    SpectralField out(grid);
    for (std::size_t i = 0; i < nm; ++i) {
        if (!inside[i]) continue;
        const double lam0 = lambda0(grid, i);
        for (std::size_t j = 0; j < nz; ++j) {
            cxd v = data.g_hat[i] * cosh_sqrt(lam0, d - z[j]);
            if (!data.h_hat.empty()) v += data.h_hat[i] * sinhc_sqrt(lam0, d - z[j]);
            out.at(i, j) = v;
        }
    }

    // integral part: walk subintervals once; each quadrature node contributes
    // to every target z_i at or below it
    std::vector<cxd> w_col(nm), f_col(nm);
    for (std::size_t panel = 0; panel + 1 < nz; ++panel) {
        const double a = z[panel], b = z[panel + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < rule.order; ++q) {
            const double s = mid + half * rule.nodes[q];
            const double wq = half * rule.weights[q];
            const InterpStencil st = cubic_stencil(z, panel, s);
            for (std::size_t i = 0; i < nm; ++i) {
                w_col[i] = st.w[0] * w.at(i, st.base) + st.w[1] * w.at(i, st.base + 1) +
                           st.w[2] * w.at(i, st.base + 2) + st.w[3] * w.at(i, st.base + 3);
            }
            forcing.eval(w_col, s, f_col);
            for (std::size_t j = 0; j <= panel; ++j) {
                const double zj = z[j];
                for (std::size_t i = 0; i < nm; ++i) {
                    if (!inside[i]) continue;
                    out.at(i, j) += wq * sinhc_sqrt(lambda0(grid, i), s - zj) * f_col[i];
                }
            }
        }
    }
    out.ensure_finite("apply_G");
    return out;
}

FixedPointResult fixed_point_solve(const CauchyData& data, const NonlinearRegSetup& setup,
                                   const LipschitzForcing& forcing, const ModeGrid& grid,
                                   const WaveParams& params, const GaussRule& rule) {
    if (setup.max_iters < 1) throw parameter_error("fixed_point_solve: max_iters must be >= 1");
    const std::size_t nz = grid.n_z();

    SpectralField w = apply_G(SpectralField(grid), data, setup, forcing, grid, params, rule);
    std::vector<double> history;
    std::vector<cxd> diff(grid.n_modes());
    for (int it = 1; it <= setup.max_iters; ++it) {
        SpectralField next = apply_G(w, data, setup, forcing, grid, params, rule);
        double res = 0.0;
        for (std::size_t j = 0; j < nz; ++j) {
            for (std::size_t i = 0; i < grid.n_modes(); ++i)
                diff[i] = w.at(i, j) - next.at(i, j);
            res = std::max(res, parseval_norm(diff, grid.spacing()));
        }
        history.push_back(res);
        w = std::move(next);
        if (res < setup.fp_tol)
            return FixedPointResult{std::move(w), it, res, std::move(history)};
    }
    throw convergence_error(
        "fixed_point_solve: residual " + std::to_string(history.back()) +
        " after " + std::to_string(setup.max_iters) + " iterations (tol " +
        std::to_string(setup.fp_tol) + ")",
        history);
}

std::vector<double> volterra_partition(int steps, const WaveParams& params) {
    if (steps < 1) throw parameter_error("volterra_partition: needs M >= 1");
    std::vector<double> z(steps + 1);
    for (int i = 0; i <= steps; ++i) z[i] = params.d() * i / steps;
    return z;
}

SpectralField volterra_march(const std::function<cxd(std::size_t, double)>& rhat,
                             const NonlinearRegSetup& setup, const ModeGrid& grid,
                             const WaveParams& params) {
    if (!rhat) throw parameter_error("volterra_march: rhat is not set");
    const int M = setup.volterra_steps;
    if (M < 1) throw parameter_error("volterra_march: needs M >= 1");
    const double d = params.d();
    const double k2 = params.k2();

    const std::vector<double> z = volterra_partition(M, params);
    if (grid.n_z() != z.size())
        throw parameter_error("volterra_march: grid must carry the uniform M-part partition");
    for (std::size_t i = 0; i < z.size(); ++i)
        if (std::abs(grid.z(i) - z[i]) > 1e-12 * d)
            throw parameter_error("volterra_march: grid z samples are not the partition nodes");

    SpectralField out(grid);
    std::vector<cxd> u(M + 1);
    for (std::size_t m = 0; m < grid.n_modes(); ++m) {
        const double lam0 = grid.rho_norm2(m);
        u[M] = rhat(m, d);  // the data value g_hat(rho)
        for (int i = M - 1; i >= 0; --i) {
            // int_{z_j}^{z_{j+1}} sinh((s-z_i) a)/a ds with u frozen at the
            // right node, summed j = M-1 down to i for a fixed order
            cxd acc{};
            for (int j = M - 1; j >= i; --j) {
                const double wji = cosh_sqrt_m1_over_lambda(lam0, z[i] - z[j + 1]) -
                                   cosh_sqrt_m1_over_lambda(lam0, z[i] - z[j]);
                acc += wji * u[j + 1];
            }
            u[i] = rhat(m, z[i]) - k2 * acc;
        }
        for (int i = 0; i <= M; ++i) out.at(m, i) = u[i];
    }
    out.ensure_finite("volterra_march");
    return out;
}

cxd example2_rhat(const Vec2& rho, double z, const WaveParams& params) {
    const double d = params.d();
    if (z < -1e-12 || z > d + 1e-12)
        throw parameter_error("example2_rhat: z must lie in [0, d]");
    const double pi = std::numbers::pi;
    const double m = rho[0] * rho[0] + rho[1] * rho[1];  // lambda_0
    const double G0 = 2.0 * pi * std::exp(-2.0 * pi * pi * m);
    // closed form of g_hat cosh((d-z)a) + int_z^d sinhc(m, s-z) S(s) ds with
    // S(s) = G0 (2 - 4 pi^2 m) cos(pi s / d):
    //   int_z^d sinh(a(s-z)) cos(pi s/d) ds = -a [cosh(a(d-z)) + cos(pi z/d)] / (m + (pi/d)^2)
    const double corr = d * d * (2.0 - 4.0 * pi * pi * m) / (pi * pi + m * d * d);
    const double ch = cosh_sqrt(m, d - z);
    return cxd(-G0 * (ch + corr * (ch + std::cos(z * pi / d))), 0.0);
}

double thm17_error_bound(double z, double delta, double Q, double ell_f,
                         const WaveParams& params) {
    const double d = params.d();
    if (!(z > 0.0) || !(z <= d + 1e-12))
        throw parameter_error("thm17_error_bound: z must lie in (0, d]");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw parameter_error("thm17_error_bound: requires delta in (0, 1)");
    if (!(Q > 0.0)) throw parameter_error("thm17_error_bound: requires Q > 0");
    const double dl2 = d * d * ell_f * ell_f * (d - z);
    return (std::sqrt(Q) * std::exp(0.5 * dl2) +
            std::sqrt(3.0 * (d * d + 1.0)) * std::exp(1.5 * dl2)) *
           std::pow(delta, z / d);
}

} // namespace helm

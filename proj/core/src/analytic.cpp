#include "helm/analytic.hpp"

#include <cmath>

#include "helm/special.hpp"

namespace helm {

SpectralField u1_hat_homogeneous(const std::vector<cxd>& h_hat, const ModeGrid& grid,
                                 const WaveParams& params) {
    if (h_hat.size() != grid.n_modes())
        throw parameter_error("u1_hat_homogeneous: h_hat size does not match grid");
    if (!params.small_kd())
        throw validity_error("u1_hat_homogeneous: requires k*d < pi/2 "
                             "(stability constant unavailable)");

    const double d = params.d();
    SpectralField out(grid);
    for (std::size_t i = 0; i < grid.n_modes(); ++i) {
        const double lam = grid.lambda(i);
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
            const double z = grid.z(j);
            double factor;
            if (grid.region(i) == Region::A2 || std::abs(lam) * d * d < 1e-8) {
                factor = z;  // series limit of sinh(za)/(a cosh(da))
            } else if (lam > 0.0) {
                factor = sinh_over_cosh_scaled(lam, z, d);
            } else {
                const double r = std::sqrt(-lam);
                factor = std::sin(z * r) / (r * std::cos(d * r));
            }
            out.at(i, j) = h_hat[i] * factor;
        }
    }
    out.ensure_finite("u1_hat_homogeneous");
    return out;
}

SpectralField w1_hat(const std::vector<cxd>& g_hat, const ModeGrid& grid,
                     const WaveParams& params) {
    if (g_hat.size() != grid.n_modes())
        throw parameter_error("w1_hat: g_hat size does not match grid");
    const double d = params.d();
    SpectralField out(grid);
    for (std::size_t i = 0; i < grid.n_modes(); ++i) {
        if (grid.region(i) == Region::A2)
            throw parameter_error("w1_hat: A2 mode at index " + std::to_string(i) +
                                  "; route it to a2_solution_hat");
        const double lam = grid.lambda(i);
        for (std::size_t j = 0; j < grid.n_z(); ++j)
            out.at(i, j) = g_hat[i] * cosh_sqrt(lam, d - grid.z(j));
    }
    out.ensure_finite("w1_hat");
    return out;
}

SpectralField w2_hat(const std::function<cxd(std::size_t, double)>& f_hat,
                     const ModeGrid& grid, const WaveParams& params,
                     const GaussRule& rule) {
    const double d = params.d();
    SpectralField out(grid);
    if (!f_hat) return out;
    for (std::size_t i = 0; i < grid.n_modes(); ++i) {
        if (grid.region(i) == Region::A2)
            throw parameter_error("w2_hat: A2 mode at index " + std::to_string(i) +
                                  "; route it to a2_solution_hat");
        const double lam = grid.lambda(i);
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
            const double z = grid.z(j);
            // sinh((z-s) sqrt(lam))/sqrt(lam) = sinhc_sqrt(lam, z-s)
            out.at(i, j) = integrate(
                [&](double s) { return f_hat(i, s) * sinhc_sqrt(lam, z - s); },
                z, d, rule);
        }
    }
    out.ensure_finite("w2_hat");
    return out;
}

SpectralField a2_solution_hat(const std::vector<cxd>& g_hat,
                              const std::function<cxd(std::size_t, double)>& f_hat,
                              const ModeGrid& grid, const GaussRule& rule) {
    if (g_hat.size() != grid.n_modes())
        throw parameter_error("a2_solution_hat: g_hat size does not match grid");
    const double d = grid.params().d();
    SpectralField out(grid);
    for (std::size_t i = 0; i < grid.n_modes(); ++i) {
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
            const double z = grid.z(j);
            cxd iterated{};
            if (f_hat) {
                // int_d^z int_s^d f(gamma) dgamma ds = -int_z^d (int_s^d f) ds
                iterated = -integrate(
                    [&](double s) {
                        return integrate([&](double g) { return f_hat(i, g); }, s, d, rule);
                    },
                    z, d, rule);
            }
            out.at(i, j) = g_hat[i] + iterated;
        }
    }
    out.ensure_finite("a2_solution_hat");
    return out;
}

SpectralField exact_uhat(const CauchyData& data, const ModeGrid& grid,
                         const WaveParams& params, const GaussRule& rule) {
    data.check_size(grid, "exact_uhat");
    if (!data.h_is_zero())
        throw parameter_error("exact_uhat: expects h == 0 "
                              "(the Neumann datum is handled by u1_hat_homogeneous)");

    const double d = params.d();
    SpectralField out(grid);
    for (std::size_t i = 0; i < grid.n_modes(); ++i) {
        const double lam = grid.lambda(i);
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
            const double z = grid.z(j);
            cxd v;
            if (grid.region(i) == Region::A2) {
                cxd iterated{};
                if (data.f_hat) {
                    iterated = -integrate(
                        [&](double s) {
                            return integrate([&](double g) { return data.f_hat(i, g); },
                                             s, d, rule);
                        },
                        z, d, rule);
                }
                v = data.g_hat[i] + iterated;
            } else {
                v = data.g_hat[i] * cosh_sqrt(lam, d - z);
                if (data.f_hat) {
                    v += integrate(
                        [&](double s) { return data.f_hat(i, s) * sinhc_sqrt(lam, z - s); },
                        z, d, rule);
                }
            }
            out.at(i, j) = v;
        }
    }
    out.ensure_finite("exact_uhat");
    return out;
}

double wellposed_bound(double g_norm, double f_norm, const WaveParams& params) {
    if (!params.small_kd())
        throw validity_error("wellposed_bound: requires k*d < pi/2 (tan singularity)");
    if (g_norm < 0.0 || f_norm < 0.0)
        throw parameter_error("wellposed_bound: norms must be nonnegative");
    const double d = params.d();
    const double k = params.k();
    const double C = std::max(std::tan(d * k) / k, 1.0);
    return 2.0 * d * C * C * (g_norm * g_norm + d * f_norm * f_norm);
}

} // namespace helm

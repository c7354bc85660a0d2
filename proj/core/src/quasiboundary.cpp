#include "helm/quasiboundary.hpp"

#include <cmath>

#include "helm/special.hpp"

namespace helm {

QuasiBoundaryParams quasi_boundary_example1(double delta, double M0,
                                            const WaveParams& params) {
    if (!(M0 > 0.0)) throw parameter_error("quasi_boundary_example1: M0 must be positive");
    if (!(delta > 0.0)) throw parameter_error("quasi_boundary_example1: delta must be positive");
    QuasiBoundaryParams qb;
    qb.alpha = delta / M0;
    const double logs = std::log(delta / M0);
    const double kappa2 = logs * logs / (params.d() * params.d());
    qb.reg = eps_manual(delta, 1.0 / (params.k2() + kappa2), params);
    return qb;
}

SpectralField xiong_uhat(const CauchyData& data_delta, const ModeGrid& grid,
                         const WaveParams& params, const QuasiBoundaryParams& qb,
                         const GaussRule& rule) {
    data_delta.check_size(grid, "xiong_uhat");
    if (!(qb.alpha > 0.0)) throw parameter_error("xiong_uhat: alpha must be positive");
    if (!data_delta.h_is_zero())
        throw parameter_error("xiong_uhat: expects h == 0");

    const double d = params.d();
    const double alpha = qb.alpha;
    const double cut = qb.reg.cutoff();
    SpectralField out(grid);
    for (std::size_t i = 0; i < grid.n_modes(); ++i) {
        if (grid.region(i) != Region::A1 || grid.rho_norm2(i) > cut) continue;
        const double lam = grid.lambda(i);
        const double a = std::sqrt(lam);
        const double g_den = 1.0 + alpha * std::cosh(d * a);
        const double f_den = 1.0 + alpha * std::sinh(d * a);
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
            const double z = grid.z(j);
            cxd v = data_delta.g_hat[i] * (std::cosh((d - z) * a) / g_den);
            if (data_delta.f_hat) {
                v -= integrate(
                         [&](double s) {
                             const double kern = std::sinh((s - z) * a) -
                                                 alpha * std::sinh((d - s + z) * a);
                             return data_delta.f_hat(i, s) * (kern / f_den);
                         },
                         z, d, rule) /
                     a;
            }
            out.at(i, j) = v;
        }
    }
    out.ensure_finite("xiong_uhat");
    return out;
}

} // namespace helm

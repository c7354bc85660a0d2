#include "helm/truncation.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "helm/special.hpp"

namespace helm {

namespace {

RegParams from_kappa(double delta, double kappa, const WaveParams& params) {
    RegParams reg;
    reg.delta = delta;
    reg.kappa = kappa;
    reg.eps = 1.0 / (params.k2() + kappa * kappa);
    return reg;
}

} // namespace

RegParams eps_apriori(double delta, double M0, const WaveParams& params) {
    if (!(M0 > 0.0)) throw parameter_error("eps_apriori: M0 must be positive");
    if (!(delta > 0.0) || !(delta < M0))
        throw parameter_error("eps_apriori: requires 0 < delta < M0");
    RegParams reg = from_kappa(delta, -std::log(delta / M0) / params.d(), params);
    reg.M0 = M0;
    reg.rule = RegRule::apriori;
    return reg;
}

RegParams eps_logrule(double delta, const WaveParams& params) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw parameter_error("eps_logrule: requires 0 < delta < 1");
    RegParams reg = from_kappa(delta, std::log(1.0 / delta) / params.d(), params);
    reg.p_const = 1.0;
    reg.rule = RegRule::logrule;
    return reg;
}

RegParams eps_manual(double delta, double eps, const WaveParams& params) {
    if (!(eps > 0.0)) throw parameter_error("eps_manual: eps must be positive");
    if (!(1.0 / eps > params.k2()))
        throw parameter_error("eps_manual: requires 1/eps > k^2 so kappa is real");
    if (delta < 0.0) throw parameter_error("eps_manual: delta must be >= 0");
    RegParams reg;
    reg.delta = delta;
    reg.eps = eps;
    reg.kappa = std::sqrt(1.0 / eps - params.k2());
    reg.rule = RegRule::manual;
    return reg;
}

SpectralField truncate(const SpectralField& field, const RegParams& reg) {
    const ModeGrid& g = field.grid();
    SpectralField out = field;
    const double cut = reg.cutoff();
    for (std::size_t i = 0; i < g.n_modes(); ++i) {
        if (g.rho_norm2(i) <= cut) continue;
        for (std::size_t j = 0; j < g.n_z(); ++j) out.at(i, j) = cxd{};
    }
    return out;
}

std::vector<cxd> truncate(const std::vector<cxd>& per_mode, const ModeGrid& grid,
                          const RegParams& reg) {
    if (per_mode.size() != grid.n_modes())
        throw parameter_error("truncate: column size does not match grid");
    std::vector<cxd> out = per_mode;
    const double cut = reg.cutoff();
    for (std::size_t i = 0; i < grid.n_modes(); ++i)
        if (grid.rho_norm2(i) > cut) out[i] = cxd{};
    return out;
}

CauchyData truncate(const CauchyData& data, const ModeGrid& grid, const RegParams& reg) {
    data.check_size(grid, "truncate");
    CauchyData out;
    out.g_hat = truncate(data.g_hat, grid, reg);
    if (!data.h_hat.empty()) out.h_hat = truncate(data.h_hat, grid, reg);
    if (data.f_hat) {
        auto mask = std::make_shared<std::vector<char>>(grid.n_modes(), char(0));
        const double cut = reg.cutoff();
        for (std::size_t i = 0; i < grid.n_modes(); ++i)
            (*mask)[i] = grid.rho_norm2(i) <= cut ? 1 : 0;
        auto inner = data.f_hat;
        out.f_hat = [mask, inner](std::size_t i, double s) {
            return (*mask)[i] ? inner(i, s) : cxd{};
        };
    }
    return out;
}

SpectralField regularized_uhat(const CauchyData& data_delta, const ModeGrid& grid,
                               const WaveParams& params, const RegParams& reg,
                               const GaussRule& rule) {
    const CauchyData cut = truncate(data_delta, grid, reg);
    return exact_uhat(cut, grid, params, rule);
}

double m1_stability(double z, const RegParams& reg, const WaveParams& params) {
    const double d = params.d();
    if (!(z >= 0.0) || !(z <= d + 1e-12))
        throw parameter_error("m1_stability: z must lie in [0, d]");
    if (!(reg.kappa > 0.0)) throw parameter_error("m1_stability: requires kappa > 0");
    const double t = d - z;
    const double c = std::cosh(reg.kappa * t);
    const double m1sq = 2.0 * c * c + t * sinh_defect_over_2k3(reg.kappa, t);
    return std::sqrt(m1sq);
}

double thm11_error_bound(double z, double delta, double M0, const WaveParams& params) {
    const double d = params.d();
    if (!(z > 0.0) || !(z <= d + 1e-12))
        throw parameter_error("thm11_error_bound: z must lie in (0, d]");
    if (!(delta > 0.0) || !(delta < M0))
        throw parameter_error("thm11_error_bound: requires 0 < delta < M0");
    const double zr = z / d;
    const double logs = std::log(M0 / delta);
    const double bracket = 1.0 + d * d * d * (d - z) / (4.0 * logs * logs * logs);
    const double inner = 2.0 * std::pow(delta, 2.0 * (1.0 - zr))
                         + std::pow(M0, 2.0 * (d - z) / d) * bracket;
    return (2.0 * std::sqrt(inner) + std::pow(M0, (d - z) / d)) * std::pow(delta, zr);
}

double thm13_error_bound(double z, const RegParams& reg, const WaveParams& params,
                         double M0, double P) {
    const double d = params.d();
    if (!(z >= 0.0) || !(z <= d + 1e-12))
        throw parameter_error("thm13_error_bound: z must lie in [0, d]");
    if (!(reg.kappa > 0.0)) throw parameter_error("thm13_error_bound: requires kappa > 0");
    const double k3 = reg.kappa * reg.kappa * reg.kappa;
    return (M0 + P) * std::sqrt(2.0 + (d - z) / (4.0 * k3)) * std::exp(-z * reg.kappa);
}

double theta_measure(const RegParams& reg, const WaveParams& params) {
    if (reg.rule == RegRule::apriori) {
        const double logs = std::log(reg.delta / *reg.M0);
        return params.k2() + logs * logs / (params.d() * params.d());
    }
    return std::numbers::pi / reg.eps;  // area of the radius-sqrt(1/eps) disk
}

BoundReport bound_report(const std::vector<double>& z_samples, const RegParams& reg,
                         const WaveParams& params, std::optional<double> M0,
                         std::optional<double> P) {
    const std::optional<double> m0 = M0 ? M0 : reg.M0;
    const std::optional<double> p = P ? P : reg.p_const;
    BoundReport rep;
    rep.p_const = p;
    rep.theta_area = theta_measure(reg, params);
    rep.m1_of_z.reserve(z_samples.size());
    for (double z : z_samples) rep.m1_of_z.push_back(m1_stability(z, reg, params));
    if (reg.rule == RegRule::apriori && m0 && reg.delta < *m0) {
        for (double z : z_samples)
            rep.thm11_bound.push_back(thm11_error_bound(z, reg.delta, *m0, params));
    }
    if (p && m0) {
        for (double z : z_samples)
            rep.thm13_bound.push_back(thm13_error_bound(z, reg, params, *m0, *p));
    }
    return rep;
}

} // namespace helm

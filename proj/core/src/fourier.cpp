#include "helm/fourier.hpp"

#include <cmath>
#include <numbers>

namespace helm {

namespace {

// Kahan-compensated sum of |v|^2 in storage order.
double sum_abs2(const std::vector<cxd>& values, std::size_t begin, std::size_t stride,
                std::size_t count) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const cxd& v = values[begin + i * stride];
        const double term = v.real() * v.real() + v.imag() * v.imag();
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

int panel_count(double freq, double c) {
    const double cycles = std::abs(freq) * c;
    const int p = static_cast<int>(std::ceil(4.0 * cycles + 1.0));
    return p < 1 ? 1 : p;
}

} // namespace

double parseval_norm(const SpectralField& field, std::size_t z_index) {
    const ModeGrid& g = field.grid();
    if (z_index >= g.n_z()) throw parameter_error("parseval_norm: z_index out of range");
    const double s2 = sum_abs2(field.values(), z_index, g.n_z(), g.n_modes());
    return g.spacing() * std::sqrt(s2);
}

double parseval_norm(const std::vector<cxd>& column, double spacing) {
    return spacing * std::sqrt(sum_abs2(column, 0, 1, column.size()));
}

cxd fourier_axis_coeff(const std::function<double(double)>& fn, double c,
                       double t, int order) {
    if (!(c > 0.0)) throw parameter_error("fourier_axis_coeff: c must be positive");
    const GaussRule rule = legendre_rule(order);
    const int panels = panel_count(t, c);
    const double w = c / panels;
    cxd acc{};
    for (int p = 0; p < panels; ++p) {
        const double a = p * w;
        acc += integrate(
            [&](double x) {
                const double fx = fn(x);
                if (!std::isfinite(fx))
                    throw data_error("fourier_axis_coeff: non-finite sample of fn");
                const double phase = -2.0 * std::numbers::pi * t * x;
                return cxd(fx * std::cos(phase), fx * std::sin(phase));
            },
            a, a + w, rule);
    }
    return acc;
}

cxd fourier_coeff_rect(const std::function<double(double, double)>& fn, double c,
                       const Vec2& rho, int order) {
    if (!(c > 0.0)) throw parameter_error("fourier_coeff_rect: c must be positive");
    if (order < 1) throw parameter_error("fourier_coeff_rect: order must be >= 1");
    const GaussRule rule = legendre_rule(order);
    const double rinf = std::max(std::abs(rho[0]), std::abs(rho[1]));
    const int panels = panel_count(rinf, c);
    const double w = c / panels;

    // tensor product: inner complex integral in y for fixed x, then x
    const auto inner = [&](double x) {
        cxd acc{};
        for (int p = 0; p < panels; ++p) {
            const double a = p * w;
            acc += integrate(
                [&](double y) {
                    const double fx = fn(x, y);
                    if (!std::isfinite(fx))
                        throw data_error("fourier_coeff_rect: non-finite sample of fn");
                    const double phase =
                        -2.0 * std::numbers::pi * (rho[0] * x + rho[1] * y);
                    return cxd(fx * std::cos(phase), fx * std::sin(phase));
                },
                a, a + w, rule);
        }
        return acc;
    };
    cxd acc{};
    for (int p = 0; p < panels; ++p) {
        const double a = p * w;
        acc += integrate(inner, a, a + w, rule);
    }
    return acc;
}

} // namespace helm

// Gauss-Legendre rules and 1D integration.

#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <vector>

#include "helm/errors.hpp"

namespace helm {

/// Nodes/weights of the N-point Gauss-Legendre rule on (-1, 1).
struct GaussRule {
    int order = 0;
    std::vector<double> nodes;    // strictly ascending, symmetric about 0
    std::vector<double> weights;  // positive, sum to 2
};

/// Build the N-point rule (Newton on P_N from Chebyshev initial guesses).
/// order must lie in [1, 64].
GaussRule legendre_rule(int order);

namespace detail {
inline bool sample_finite(double v) { return std::isfinite(v); }
inline bool sample_finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}
} // namespace detail

/// Affinely mapped Gauss-Legendre sum over [a, b]; exact for polynomials of
/// degree <= 2N-1.  Works for real- or complex-valued integrands.
template <typename F>
auto integrate(F&& f, double a, double b, const GaussRule& rule)
    -> decltype(f(a)) {
    if (!(a <= b)) throw parameter_error("integrate: interval [a,b] requires a <= b");
    using value_type = decltype(f(a));
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    value_type acc{};
    for (int i = 0; i < rule.order; ++i) {
        const value_type fx = f(mid + half * rule.nodes[i]);
        if (!detail::sample_finite(fx))
            throw data_error("integrate: non-finite sample of integrand");
        acc += rule.weights[i] * fx;
    }
    return half * acc;
}

} // namespace helm

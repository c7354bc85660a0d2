// Small analytic kernels used by every mode solution.
//
// The mode formulas are piecewise in the sign of lambda = |rho|^2 - k^2
// (cosh/sinh on A1, cos/sin on A3) but each piece is the restriction of one
// entire function of lambda.  Evaluating that function directly, with a short
// Taylor series near lambda = 0, removes the A2 boundary as a special case
// and kills the 1/sqrt(lambda) cancellation.

#pragma once

#include <cmath>
#include <limits>

namespace helm {

// series window: |lambda| * t^2 below this uses the 5-term Taylor expansion
inline constexpr double kSeriesThreshold = 1e-4;

/// cosh(t*sqrt(lambda)) for lambda >= 0, cos(t*sqrt(-lambda)) for lambda < 0.
inline double cosh_sqrt(double lambda, double t) {
    const double x = lambda * t * t;
    if (std::abs(x) < kSeriesThreshold) {
        return 1.0 + x / 2.0 + x * x / 24.0 + x * x * x / 720.0
               + x * x * x * x / 40320.0;
    }
    if (lambda > 0.0) return std::cosh(t * std::sqrt(lambda));
    return std::cos(t * std::sqrt(-lambda));
}

/// sinh(t*sqrt(lambda))/sqrt(lambda) (resp. sin/sqrt(-lambda)); odd in t,
/// limit t at lambda = 0.
inline double sinhc_sqrt(double lambda, double t) {
    const double x = lambda * t * t;
    if (std::abs(x) < kSeriesThreshold) {
        return t * (1.0 + x / 6.0 + x * x / 120.0 + x * x * x / 5040.0
                    + x * x * x * x / 362880.0);
    }
    if (lambda > 0.0) {
        const double r = std::sqrt(lambda);
        return std::sinh(t * r) / r;
    }
    const double r = std::sqrt(-lambda);
    return std::sin(t * r) / r;
}

/// (cosh(t*sqrt(lambda)) - 1)/lambda; limit t^2/2 at lambda = 0.
inline double cosh_sqrt_m1_over_lambda(double lambda, double t) {
    const double x = lambda * t * t;
    if (std::abs(x) < kSeriesThreshold) {
        return t * t * (0.5 + x / 24.0 + x * x / 720.0 + x * x * x / 40320.0
                        + x * x * x * x / 3628800.0);
    }
    return (cosh_sqrt(lambda, t) - 1.0) / lambda;
}

/// sinh(z*sqrt(lambda)) / (sqrt(lambda)*cosh(d*sqrt(lambda))) for lambda > 0,
/// in exponentially scaled form so z,d*sqrt(lambda) beyond exp overflow still
/// evaluate (the ratio itself is bounded by z for 0 <= z <= d).
inline double sinh_over_cosh_scaled(double lambda, double z, double d) {
    const double a = std::sqrt(lambda);
    if (a * d < 1.0) return sinhc_sqrt(lambda, z) / cosh_sqrt(lambda, d);
    // e^{(z-d)a} (1 - e^{-2za}) / (a (1 + e^{-2da}))
    return std::exp((z - d) * a) * (1.0 - std::exp(-2.0 * z * a))
           / (a * (1.0 + std::exp(-2.0 * d * a)));
}

/// [sinh(2*kappa*t) - 2*kappa*t] / (2*kappa^3), series for kappa*t small.
inline double sinh_defect_over_2k3(double kappa, double t) {
    const double y = 2.0 * kappa * t;
    if (std::abs(y) < 1e-2) {
        // (y^3/6)(1 + y^2/20 + y^4/840) / (2 kappa^3) = (2t^3/3)(1 + y^2/20 + y^4/840)
        return (2.0 * t * t * t / 3.0) * (1.0 + y * y / 20.0 + y * y * y * y / 840.0);
    }
    return (std::sinh(y) - y) / (2.0 * kappa * kappa * kappa);
}

inline bool finite(double v) { return std::isfinite(v); }

} // namespace helm

// Frequency-cutoff regularization: the cutoff set, both parameter choice
// rules, the regularized solution, and the evaluable stability/error bounds.

#pragma once

#include <optional>
#include <vector>

#include "helm/analytic.hpp"
#include "helm/types.hpp"

namespace helm {

enum class RegRule { apriori, logrule, manual };

/// Noise level, cutoff and the derived kappa = sqrt(1/eps - k^2).
struct RegParams {
    double delta = 0.0;
    double eps = 0.0;
    double kappa = 0.0;
    std::optional<double> M0;       // a-priori constant, when the rule has one
    std::optional<double> p_const;  // the log-rule bound's P, when the rule has one
    RegRule rule = RegRule::manual;

    double cutoff() const { return 1.0 / eps; }  // the |rho|^2 threshold
};

/// A-priori rule: kappa = -(1/d) ln(delta/M0), requires 0 < delta < M0.
RegParams eps_apriori(double delta, double M0, const WaveParams& params);

/// Log rule: kappa = (1/d) ln(1/delta), requires 0 < delta < 1; carries P = 1.
RegParams eps_logrule(double delta, const WaveParams& params);

/// Manual cutoff; requires 1/eps > k^2 so kappa is real.
RegParams eps_manual(double delta, double eps, const WaveParams& params);

/// Zero all modes with |rho|^2 > 1/eps; a projection (idempotent,
/// norm-nonincreasing).
SpectralField truncate(const SpectralField& field, const RegParams& reg);
std::vector<cxd> truncate(const std::vector<cxd>& per_mode, const ModeGrid& grid,
                          const RegParams& reg);
CauchyData truncate(const CauchyData& data, const ModeGrid& grid, const RegParams& reg);

/// Regularized solution: exact_uhat applied to the truncated data inside the
/// cutoff disk, zero outside.  data must have h == 0.
SpectralField regularized_uhat(const CauchyData& data_delta, const ModeGrid& grid,
                               const WaveParams& params, const RegParams& reg,
                               const GaussRule& rule);

/// Stability function M1(z) (noise amplification of the truncated solve).
double m1_stability(double z, const RegParams& reg, const WaveParams& params);

/// A-priori-rule total error bound at depth z, 0 < z <= d, 0 < delta < M0.
double thm11_error_bound(double z, double delta, double M0, const WaveParams& params);

/// Log-rule-style bound (M0 + P) sqrt(2 + (d-z)/(4 kappa^3)) e^{-z kappa}.
double thm13_error_bound(double z, const RegParams& reg, const WaveParams& params,
                         double M0, double P);

/// Area of the cutoff set: the a-priori rule's stated upper bound
/// k^2 + (1/d^2) ln^2(delta/M0), or the disk area pi/eps otherwise.
double theta_measure(const RegParams& reg, const WaveParams& params);

/// Bound evaluations over the grid's z samples.
struct BoundReport {
    std::vector<double> m1_of_z;
    std::vector<double> thm11_bound;  // empty unless rule == apriori with delta < M0
    std::vector<double> thm13_bound;  // empty unless P is available
    std::optional<double> p_const;
    double theta_area = 0.0;
};

/// M0/P arguments override what the rule carries (P is an assumption of the
/// bound, never estimated from data).
BoundReport bound_report(const std::vector<double>& z_samples, const RegParams& reg,
                         const WaveParams& params,
                         std::optional<double> M0 = std::nullopt,
                         std::optional<double> P = std::nullopt);

} // namespace helm

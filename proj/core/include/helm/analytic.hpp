// Closed-form Fourier-mode solutions of the Cauchy problem on a slab:
// homogeneous part driven by the Neumann datum, complementary + particular
// parts driven by (g, f), the lambda = 0 case, the assembled solution, and
// the well-posedness bound on the A2/A3 mode set.

#pragma once

#include "helm/quadrature.hpp"
#include "helm/types.hpp"

namespace helm {

/// Mode solution of u'' = lambda*u, u(0) = 0, u'(d) = h_hat.
/// Requires params.small_kd() (otherwise the A3 denominator can vanish).
SpectralField u1_hat_homogeneous(const std::vector<cxd>& h_hat, const ModeGrid& grid,
                                 const WaveParams& params);

/// Complementary part: g_hat * cosh((d-z)*sqrt(lambda)) on A1, the cosine
/// twin on A3.  A2 modes must be routed to a2_solution_hat by the caller.
SpectralField w1_hat(const std::vector<cxd>& g_hat, const ModeGrid& grid,
                     const WaveParams& params);

/// Particular part: (1/sqrt(lambda)) int_z^d f_hat(rho,s) sinh((z-s)sqrt(lambda)) ds,
/// quadrature fresh on [z, d] for every target z.
SpectralField w2_hat(const std::function<cxd(std::size_t, double)>& f_hat,
                     const ModeGrid& grid, const WaveParams& params,
                     const GaussRule& rule);

/// lambda = 0 solution: g_hat + int_d^z int_s^d f_hat(rho,gamma) dgamma ds,
/// nested quadrature with the same rule.  Evaluated for every grid mode;
/// callers restrict to A2.
SpectralField a2_solution_hat(const std::vector<cxd>& g_hat,
                              const std::function<cxd(std::size_t, double)>& f_hat,
                              const ModeGrid& grid, const GaussRule& rule);

/// Region-dispatched solution of the h == 0 problem: w1 + w2 on A1/A3,
/// the Newton-Leibniz form on A2.  data.h_hat must be absent or all zero.
SpectralField exact_uhat(const CauchyData& data, const ModeGrid& grid,
                         const WaveParams& params, const GaussRule& rule);

/// Continuous-dependence bound on the A2 u A3 part:
/// 2 d C^2 (g_norm^2 + d f_norm^2), C = max{tan(dk)/k, 1}.
double wellposed_bound(double g_norm, double f_norm, const WaveParams& params);

} // namespace helm

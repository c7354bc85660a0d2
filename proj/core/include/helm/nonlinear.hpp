// Mild-solution machinery for the nonlinear forcing extension: the integral
// operator G (with k^2 folded into the forcing, so the mode symbol is
// lambda_0 = |rho|^2), its fixed-point iteration, the backward Volterra
// marching scheme, and the associated error bound.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "helm/quadrature.hpp"
#include "helm/truncation.hpp"
#include "helm/types.hpp"

namespace helm {

/// Spectral action of F(u) = f(u) - k^2 u, applied one depth at a time.
/// eval maps (per-mode spectrum at depth s, s) to the spectrum of F; L_f is
/// the Lipschitz constant of f alone (ell_f = L_f + k^2).
struct LipschitzForcing {
    std::function<void(std::span<const cxd> w_at_depth, double s, std::span<cxd> out)> eval;
    double L_f = 0.0;

    double ell_f(const WaveParams& params) const { return L_f + params.k2(); }
};

/// Mode-diagonal affine forcing F(w) = -k^2 w + source(rho, s); the form both
/// worked examples use.
LipschitzForcing affine_forcing(const WaveParams& params,
                                std::function<cxd(std::size_t, double)> source = nullptr);

/// Regularization setup for the nonlinear solve.
struct NonlinearRegSetup {
    RegParams reg;
    std::optional<double> Q;   // a-priori constant of the error bound
    int max_iters = 500;
    double fp_tol = 1e-10;     // absolute, on per-depth discrete norms
    int volterra_steps = 50;   // M
    bool thm17_rule = false;   // eps = d^2 / ln^2(1/delta)
};

/// Setup with the eps = d^2/ln^2(1/delta) rule.
NonlinearRegSetup thm17_setup(double delta, const WaveParams& params);

/// One application of the integral operator:
/// G(w) = g_hat cosh((d-z)|rho|) + h_hat sinh((d-z)|rho|)/|rho|
///        + int_z^d sinh((s-z)|rho|)/|rho| F(rho, s, w) ds  on the cutoff disk,
/// zero outside.  The depth integral is per-subinterval Gauss-Legendre with a
/// cubic interpolation of w between z samples (needs >= 4 z samples).
SpectralField apply_G(const SpectralField& w, const CauchyData& data,
                      const NonlinearRegSetup& setup, const LipschitzForcing& forcing,
                      const ModeGrid& grid, const WaveParams& params,
                      const GaussRule& rule);

struct FixedPointResult {
    SpectralField field;
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> history;
};

/// Iterate w <- G(w) from w0 = G(0) until
/// sup_z ||w - G(w)||_{discrete L2} < setup.fp_tol; throws convergence_error
/// (with the residual history) if max_iters is exhausted.
FixedPointResult fixed_point_solve(const CauchyData& data, const NonlinearRegSetup& setup,
                                   const LipschitzForcing& forcing, const ModeGrid& grid,
                                   const WaveParams& params, const GaussRule& rule);

/// Backward marching solution of u = r - k^2 int_z^d sinh((s-z)|rho|)/|rho| u ds
/// on the uniform M-part partition of [0, d]; u_[M] is seeded with r(rho, d).
/// grid.z_samples() must be exactly that partition (M+1 uniform nodes).
SpectralField volterra_march(const std::function<cxd(std::size_t, double)>& rhat,
                             const NonlinearRegSetup& setup, const ModeGrid& grid,
                             const WaveParams& params);

/// The uniform M-part partition of [0, d].
std::vector<double> volterra_partition(int steps, const WaveParams& params);

/// Data-only part of the worked Gaussian example: the closed-form image of
/// g_hat = -2 pi e^{-2 pi^2 |rho|^2} and the known source under the operator,
/// i.e. everything in the Volterra equation except the -k^2 coupling term.
cxd example2_rhat(const Vec2& rho, double z, const WaveParams& params);

/// (sqrt(Q) e^{(1/2) d^2 l^2 (d-z)} + sqrt(3(d^2+1)) e^{(3/2) d^2 l^2 (d-z)}) delta^{z/d}.
double thm17_error_bound(double z, double delta, double Q, double ell_f,
                         const WaveParams& params);

} // namespace helm

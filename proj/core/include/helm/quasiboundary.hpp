// Quasi-boundary + truncation comparison solution (the Table-2 method).

#pragma once

#include "helm/quadrature.hpp"
#include "helm/truncation.hpp"
#include "helm/types.hpp"

namespace helm {

struct QuasiBoundaryParams {
    double alpha = 0.0;  // regularization parameter, > 0
    RegParams reg;       // cutoff reused from the truncation method
};

/// alpha = delta/M0 with the a-priori cutoff (the Example-1 instance).
QuasiBoundaryParams quasi_boundary_example1(double delta, double M0,
                                            const WaveParams& params);

/// Damped solution on the unstable window Theta_eps intersect A1 (zero on all
/// other modes):
///   g-term: g_hat cosh((d-z)sqrt(lam)) / (1 + alpha cosh(d sqrt(lam)))
///   f-term: -(1/sqrt(lam)) int_z^d f_hat(s)
///             [sinh((s-z)sqrt(lam)) - alpha sinh((d-s+z)sqrt(lam))]
///             / (1 + alpha sinh(d sqrt(lam))) ds
/// The reflected argument d-s+z makes the alpha term saturate against its
/// denominator; with d = 1/2 it matches the published instance.
SpectralField xiong_uhat(const CauchyData& data_delta, const ModeGrid& grid,
                         const WaveParams& params, const QuasiBoundaryParams& qb,
                         const GaussRule& rule);

} // namespace helm

// Numerical realization of the blow-up counterexample: data families whose
// norms shrink like 1/n while the solution at z = 0 grows exponentially.

#pragma once

#include <vector>

#include "helm/quadrature.hpp"
#include "helm/types.hpp"

namespace helm {

/// Index-n member of the family: g_hat = sqrt(n) on the window
/// W_n = (n+k+1, n+k+1+1/n)^2, f_hat = g_hat/d at every depth.
struct BlowupFamily {
    BlowupFamily(int n, const WaveParams& params);

    int n;
    WaveParams params;
    double window_lo;     // n + k + 1
    double window_width;  // 1/n
    double g_amp;         // sqrt(n)
    double f_amp;         // sqrt(n)/d
};

struct FamilyNorms {
    double g_sq_exact;     // 1/n
    double f_sq_exact;     // 1/(n d^2), per depth: the Parseval norm of g_hat/d
    double g_sq_discrete;  // cell-centered Riemann sum over W_n
    double f_sq_discrete;
};

/// Closed-form data norms plus their discrete cross-checks.
FamilyNorms family_norms(const BlowupFamily& fam, int cells_per_axis = 128);

/// (n^2-1)/(2(n^2+1)) * e^{2dn} / (4n e^{2kd}).
double blowup_lower_bound(const BlowupFamily& fam);

struct BlowupRow {
    int n;
    double g_norm_sq;         // discrete ||g_n||^2
    double u0_norm_sq;        // discrete ||u_n(.,0)||^2
    double lower_bound;
    double log_u0_norm_sq;    // exponent-scaled value, valid for any n
};

/// Evaluate the family solutions at z = 0 on dedicated fine sub-grids over
/// each W_n and compare with the lower bound.  Requires 2 d n < 700 for every
/// n (beyond that the linear-scale norm overflows; log_u0_norm_sq is the
/// exponent-scaled alternative and demo_blowup_log has no such cap).
std::vector<BlowupRow> demo_blowup(const std::vector<int>& n_list, int cells_per_axis,
                                   const WaveParams& params, const GaussRule& rule);

/// log ||u_n(.,0)||^2 computed in exponent-scaled arithmetic (no 2dn cap).
double blowup_log_norm_sq(const BlowupFamily& fam, int cells_per_axis);

} // namespace helm

// Parseval-checked discrete norms and Fourier coefficients of compactly
// supported data on a square.

#pragma once

#include <functional>

#include "helm/quadrature.hpp"
#include "helm/types.hpp"

namespace helm {

/// Discrete L2 norm over rho at one depth: sqrt(spacing^2 * sum |v|^2).
/// Fixed storage order with compensated (Kahan) summation, so the result is
/// independent of how callers might partition the mode loop.
double parseval_norm(const SpectralField& field, std::size_t z_index);

/// Same reduction for a raw per-mode column.
double parseval_norm(const std::vector<cxd>& column, double spacing);

/// int_0^c fn(x) e^{-2 pi i t x} dx by composite Gauss-Legendre; the panel
/// count grows with |t|*c so the oscillation stays resolved
/// (>= 4 panels per cycle, at least one panel).
cxd fourier_axis_coeff(const std::function<double(double)>& fn, double c,
                       double t, int order);

/// int over (0,c)^2 of fn(x, y) e^{-2 pi i <rho, xi>} dxi, tensor composite
/// Gauss-Legendre with the same per-axis panel rule on |rho|_inf.
cxd fourier_coeff_rect(const std::function<double(double, double)>& fn, double c,
                       const Vec2& rho, int order);

} // namespace helm

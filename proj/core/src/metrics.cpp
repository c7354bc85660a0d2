#include "helm/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace helm {

double error_E(const SpectralField& exact, const SpectralField& approx, double z0,
               const std::vector<std::size_t>& window) {
    if (&exact.grid() != &approx.grid())
        throw parameter_error("error_E: fields must share a grid");
    if (window.empty()) throw parameter_error("error_E: empty mode window");
    const ModeGrid& g = exact.grid();
    const std::size_t zi = g.z_index_of(z0);

    double sum = 0.0, comp = 0.0;  // Kahan, fixed window order
    for (std::size_t i : window) {
        if (i >= g.n_modes()) throw parameter_error("error_E: window index out of range");
        const cxd dv = exact.at(i, zi) - approx.at(i, zi);
        const double term = dv.real() * dv.real() + dv.imag() * dv.imag();
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::sqrt(sum / static_cast<double>(window.size()));
}

void ErrorReport::sort_rows() {
    std::sort(rows.begin(), rows.end(),
              [](const ErrorRow& a, const ErrorRow& b) { return a.delta > b.delta; });
}

} // namespace helm

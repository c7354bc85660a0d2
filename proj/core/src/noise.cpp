#include "helm/noise.hpp"

#include <cmath>
#include <memory>
#include <random>

#include "helm/fourier.hpp"

namespace helm {

CauchyData apply_example1_noise(const NoiseModel& model, const CauchyData& clean,
                                const std::vector<cxd>& box_indicator_hat) {
    if (model.kind != NoiseKind::example1_deterministic)
        throw parameter_error("apply_example1_noise: wrong noise kind");
    if (!(model.norm_const > 0.0))
        throw parameter_error("apply_example1_noise: norm_const must be positive");
    if (clean.g_hat.size() != box_indicator_hat.size())
        throw parameter_error("apply_example1_noise: box spectrum size mismatch");

    CauchyData out;
    out.g_hat.resize(clean.g_hat.size());
    for (std::size_t i = 0; i < out.g_hat.size(); ++i)
        out.g_hat[i] = model.delta * box_indicator_hat[i];
    out.h_hat = clean.h_hat;
    if (clean.f_hat) {
        const double fac = 1.0 + model.delta / model.norm_const;
        auto inner = clean.f_hat;
        out.f_hat = [fac, inner](std::size_t i, double s) { return fac * inner(i, s); };
    }
    return out;
}

CauchyData apply_additive_uniform_noise(const NoiseModel& model, const CauchyData& clean,
                                        const ModeGrid& grid, std::uint64_t seed) {
    if (model.kind != NoiseKind::additive_uniform)
        throw parameter_error("apply_additive_uniform_noise: wrong noise kind");
    clean.check_size(grid, "apply_additive_uniform_noise");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = grid.n_modes();

    auto draw_scaled = [&](double target_norm) {
        auto eta = std::make_shared<std::vector<cxd>>(n);
        for (std::size_t i = 0; i < n; ++i) (*eta)[i] = cxd(u(rng), u(rng));
        const double norm = parseval_norm(*eta, grid.spacing());
        const double scale = norm > 0.0 ? target_norm / norm : 0.0;
        for (cxd& v : *eta) v *= scale;
        return eta;
    };

    CauchyData out;
    const auto eta_g = draw_scaled(model.delta);
    out.g_hat.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.g_hat[i] = clean.g_hat[i] + (*eta_g)[i];
    out.h_hat = clean.h_hat;

    // depth-constant perturbation with ||.||_{L2(Omega)} = delta
    const auto eta_f = draw_scaled(model.delta / std::sqrt(grid.params().d()));
    auto inner = clean.f_hat;
    out.f_hat = [eta_f, inner](std::size_t i, double s) {
        cxd v = (*eta_f)[i];
        if (inner) v += inner(i, s);
        return v;
    };
    return out;
}

} // namespace helm

// Noise models applied to spectral Cauchy data.

#pragma once

#include <cstdint>

#include "helm/types.hpp"

namespace helm {

enum class NoiseKind { example1_deterministic, additive_uniform, none };

struct NoiseModel {
    NoiseKind kind = NoiseKind::none;
    double delta = 0.0;
    double norm_const = 0.3167506677;  // ||f|| of the worked example's forcing
};

/// Deterministic measured data of the worked rectangular example:
/// g_delta is the constant delta on the unit box (spectrum delta *
/// box_indicator_hat) and f_delta = f * (1 + delta/norm_const).
CauchyData apply_example1_noise(const NoiseModel& model, const CauchyData& clean,
                                const std::vector<cxd>& box_indicator_hat);

/// Seeded uniform per-mode perturbation with discrete-norm amplitude delta on
/// g and per-depth amplitude delta/sqrt(d) on f.  Fully deterministic for a
/// fixed seed.
CauchyData apply_additive_uniform_noise(const NoiseModel& model, const CauchyData& clean,
                                        const ModeGrid& grid, std::uint64_t seed);

} // namespace helm

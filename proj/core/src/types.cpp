#include "helm/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace helm {

WaveParams::WaveParams(double k, double d) : k_(k), d_(d) {
    if (!(k > 0.0) || !std::isfinite(k))
        throw parameter_error("WaveParams: wave number k must be positive");
    if (!(d > 0.0) || !std::isfinite(d))
        throw parameter_error("WaveParams: slab depth d must be positive");
}

bool WaveParams::small_kd() const { return k_ * d_ < std::numbers::pi / 2.0; }

double lambda_of(const Vec2& rho, const WaveParams& params) {
    return rho[0] * rho[0] + rho[1] * rho[1] - params.k2();
}

double lambda_tolerance(const WaveParams& params) {
    return 1e-12 * std::max(1.0, params.k2());
}

Region classify(const Vec2& rho, const WaveParams& params) {
    const double lam = lambda_of(rho, params);
    if (std::abs(lam) <= lambda_tolerance(params)) return Region::A2;
    return lam > 0.0 ? Region::A1 : Region::A3;
}

ModeGrid::ModeGrid(std::vector<Vec2> rho_samples, double spacing,
                   std::vector<double> z_samples, const WaveParams& params)
    : rho_(std::move(rho_samples)),
      spacing_(spacing),
      z_(std::move(z_samples)),
      params_(params) {
    if (rho_.empty()) throw parameter_error("ModeGrid: no rho samples");
    if (!(spacing_ > 0.0)) throw parameter_error("ModeGrid: spacing must be positive");
    if (z_.empty()) throw parameter_error("ModeGrid: no z samples");
    if (z_.front() < 0.0 || z_.back() > params_.d() + 1e-12)
        throw parameter_error("ModeGrid: z samples must lie in [0, d]");
    for (std::size_t j = 1; j < z_.size(); ++j)
        if (!(z_[j] > z_[j - 1]))
            throw parameter_error("ModeGrid: z samples must be strictly ascending");

    region_.reserve(rho_.size());
    lambda_.reserve(rho_.size());
    for (const Vec2& p : rho_) {
        lambda_.push_back(lambda_of(p, params_));
        region_.push_back(classify(p, params_));
    }
}

ModeGrid ModeGrid::square_window(double radius, int divisor,
                                 std::vector<double> z_samples,
                                 const WaveParams& params) {
    if (!(radius > 0.0)) throw parameter_error("square_window: radius must be positive");
    if (divisor < 1) throw parameter_error("square_window: divisor must be >= 1");
    const double h = radius / divisor;
    std::vector<Vec2> rho;
    rho.reserve(static_cast<std::size_t>(2 * divisor + 1) * (2 * divisor + 1));
    for (int i = -divisor; i <= divisor; ++i)
        for (int j = -divisor; j <= divisor; ++j)
            rho.push_back({i * h, j * h});
    return ModeGrid(std::move(rho), h, std::move(z_samples), params);
}

ModeGrid ModeGrid::cell_centered_window(double lo, double width, int cells_per_axis,
                                        std::vector<double> z_samples,
                                        const WaveParams& params) {
    if (!(width > 0.0)) throw parameter_error("cell_centered_window: width must be positive");
    if (cells_per_axis < 1) throw parameter_error("cell_centered_window: need >= 1 cell");
    const double h = width / cells_per_axis;
    std::vector<Vec2> rho;
    rho.reserve(static_cast<std::size_t>(cells_per_axis) * cells_per_axis);
    for (int i = 0; i < cells_per_axis; ++i)
        for (int j = 0; j < cells_per_axis; ++j)
            rho.push_back({lo + (i + 0.5) * h, lo + (j + 0.5) * h});
    return ModeGrid(std::move(rho), h, std::move(z_samples), params);
}

std::size_t ModeGrid::z_index_of(double z0) const {
    for (std::size_t j = 0; j < z_.size(); ++j)
        if (std::abs(z_[j] - z0) <= 1e-12 * std::max(1.0, std::abs(z0))) return j;
    throw parameter_error("z_index_of: z0 = " + std::to_string(z0) +
                          " is not a grid z sample");
}

void SpectralField::ensure_finite(const char* producer) const {
    const std::size_t nz = grid_->n_z();
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        const cxd& v = values_[idx];
        if (std::isfinite(v.real()) && std::isfinite(v.imag())) continue;
        const std::size_t ri = idx / nz;
        const Vec2& p = grid_->rho(ri);
        throw validity_error(std::string(producer) + ": non-finite value at mode rho = (" +
                             std::to_string(p[0]) + ", " + std::to_string(p[1]) +
                             "), z = " + std::to_string(grid_->z(idx % nz)) +
                             " (|rho|^2 too far above k^2 for the unregularized formula)");
    }
}

bool CauchyData::h_is_zero() const {
    for (const cxd& v : h_hat)
        if (v != cxd{}) return false;
    return true;
}

void CauchyData::check_size(const ModeGrid& grid, const char* where) const {
    if (g_hat.size() != grid.n_modes())
        throw parameter_error(std::string(where) + ": g_hat size does not match grid");
    if (!h_hat.empty() && h_hat.size() != grid.n_modes())
        throw parameter_error(std::string(where) + ": h_hat size does not match grid");
}

} // namespace helm

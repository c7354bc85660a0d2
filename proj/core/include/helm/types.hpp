// Shared domain types: physical parameters, frequency grids, spectral fields
// and Cauchy data in the spectral domain.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "helm/errors.hpp"

namespace helm {

using cxd = std::complex<double>;
using Vec2 = std::array<double, 2>;  // frequency-plane point rho = (rho1, rho2)

/// Physical setup: wave number k and slab depth d.
class WaveParams {
public:
    WaveParams(double k, double d);

    double k() const { return k_; }
    double d() const { return d_; }
    double k2() const { return k_ * k_; }

    /// true iff k*d < pi/2 (the validity condition for the A3 formulas);
    /// recomputed from k and d, never stored.
    bool small_kd() const;

private:
    double k_;
    double d_;
};

enum class Region { A1, A2, A3 };  // lambda > 0, = 0, < 0

/// lambda_{rho,k} = |rho|^2 - k^2; its sign classifies the mode.
double lambda_of(const Vec2& rho, const WaveParams& params);

/// A2 membership tolerance: |lambda| <= 1e-12 * max(1, k^2).
double lambda_tolerance(const WaveParams& params);

Region classify(const Vec2& rho, const WaveParams& params);

/// Discrete sampling of the frequency plane and of the depth axis.
/// rho order is fixed at construction and every reduction walks it in
/// storage order, so norms are reproducible run to run.
class ModeGrid {
public:
    ModeGrid(std::vector<Vec2> rho_samples, double spacing,
             std::vector<double> z_samples, const WaveParams& params);

    /// Square window [-R, R]^2 sampled at spacing R/divisor (the Example-1
    /// recipe: R = 1/sqrt(eps), divisor 30).
    static ModeGrid square_window(double radius, int divisor,
                                  std::vector<double> z_samples,
                                  const WaveParams& params);

    /// Cell-centered sub-grid of the square (lo, lo+width)^2 with
    /// cells_per_axis^2 cells (used for the blow-up windows W_n).
    static ModeGrid cell_centered_window(double lo, double width, int cells_per_axis,
                                         std::vector<double> z_samples,
                                         const WaveParams& params);

    std::size_t n_modes() const { return rho_.size(); }
    std::size_t n_z() const { return z_.size(); }
    const std::vector<Vec2>& rho_samples() const { return rho_; }
    const std::vector<double>& z_samples() const { return z_; }
    double spacing() const { return spacing_; }
    const Vec2& rho(std::size_t i) const { return rho_[i]; }
    double z(std::size_t j) const { return z_[j]; }
    Region region(std::size_t i) const { return region_[i]; }
    double lambda(std::size_t i) const { return lambda_[i]; }
    double rho_norm2(std::size_t i) const {
        return rho_[i][0] * rho_[i][0] + rho_[i][1] * rho_[i][1];
    }
    const WaveParams& params() const { return params_; }

    /// Index of the z sample equal to z0 (within 1e-12), or parameter_error.
    std::size_t z_index_of(double z0) const;

private:
    std::vector<Vec2> rho_;
    double spacing_;
    std::vector<double> z_;
    WaveParams params_;
    std::vector<Region> region_;
    std::vector<double> lambda_;
};

/// Complex field over a ModeGrid, indexed (rho index, z index).
class SpectralField {
public:
    explicit SpectralField(const ModeGrid& grid)
        : grid_(&grid), values_(grid.n_modes() * grid.n_z(), cxd{}) {}

    const ModeGrid& grid() const { return *grid_; }
    cxd& at(std::size_t rho_idx, std::size_t z_idx) {
        return values_[rho_idx * grid_->n_z() + z_idx];
    }
    const cxd& at(std::size_t rho_idx, std::size_t z_idx) const {
        return values_[rho_idx * grid_->n_z() + z_idx];
    }
    std::vector<cxd>& values() { return values_; }
    const std::vector<cxd>& values() const { return values_; }

    /// Throws validity_error naming the first non-finite entry, if any.
    void ensure_finite(const char* producer) const;

private:
    const ModeGrid* grid_;
    std::vector<cxd> values_;
};

/// Spectral-side Cauchy data on a grid: g_hat/h_hat per mode, and the forcing
/// spectrum as a callable so depth integrals can sample it at quadrature
/// nodes between z samples.
struct CauchyData {
    std::vector<cxd> g_hat;
    std::vector<cxd> h_hat;                               // empty means h == 0
    std::function<cxd(std::size_t rho_idx, double s)> f_hat;  // null means f == 0

    bool h_is_zero() const;
    cxd forcing(std::size_t rho_idx, double s) const {
        return f_hat ? f_hat(rho_idx, s) : cxd{};
    }
    void check_size(const ModeGrid& grid, const char* where) const;
};

} // namespace helm

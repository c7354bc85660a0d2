// Experiment runners behind the CLI: the two linear-method error tables, the
// nonlinear table, the blow-up demonstration, and figure-data emission.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "helm/config.hpp"
#include "helm/illposedness.hpp"
#include "helm/metrics.hpp"
#include "helm/noise.hpp"
#include "helm/nonlinear.hpp"
#include "helm/quasiboundary.hpp"
#include "helm/truncation.hpp"

namespace helm {

/// One (delta, grid, data) instance of the rectangular-box example pipeline.
/// Owns its grid (fields keep pointers into it).
struct Example1Cell {
    WaveParams params;
    RegParams reg;
    std::unique_ptr<ModeGrid> grid;
    CauchyData noisy;
    std::vector<std::size_t> window;  // cutoff disk intersect A1, fixed order
    std::unique_ptr<SpectralField> exact;  // reference spectrum (z-d)^4 * xy-coeff
};

/// Build the measured data, grid and reference spectrum for one delta.
/// Requires the pinned setup k = 1/3, d = 1/2, M0 = 1/48 and evaluates the
/// cutoff from eps = (k^2 + (1/d^2) ln^2(delta/M0))^-1 (a-priori rule when
/// delta < M0, the same formula as a manual rule otherwise).
Example1Cell make_example1_cell(const RunConfig& cfg, double delta,
                                std::vector<double> z_samples);

/// Truncation-method table: regularized_uhat vs the reference spectrum.
ErrorReport run_table1(const RunConfig& cfg);

/// Quasi-boundary comparison table: xiong_uhat with alpha = delta/M0.
ErrorReport run_table2(const RunConfig& cfg);

/// One delta instance of the Gaussian nonlinear example.
struct Example2Cell {
    WaveParams params;
    NonlinearRegSetup setup;
    std::unique_ptr<ModeGrid> grid;        // z samples = marching partition
    std::vector<std::size_t> window;       // full cutoff disk
    std::unique_ptr<SpectralField> march;  // backward Volterra solution
    std::unique_ptr<SpectralField> exact;  // closed-form Gaussian spectrum
};

Example2Cell make_example2_cell(const RunConfig& cfg, double delta);

/// Nonlinear table: d = pi/sqrt(3), k = sqrt(5), eps = d^2/ln^2(1/delta);
/// each requested z0 is evaluated at the nearest marching node.
ErrorReport run_table3(const RunConfig& cfg);

struct BlowupReport {
    std::uint64_t config_hash = 0;
    std::vector<BlowupRow> rows;
};

BlowupReport run_blowup(const RunConfig& cfg);

/// (rho1, rho2, |u|) triples at depth z0, 17 significant digits, fixed order.
void emit_figure_data(const SpectralField& field, double z0, const std::string& path);

void write_report_csv(const ErrorReport& rep, const std::string& path);
void write_blowup_csv(const BlowupReport& rep, const std::string& path);

/// Config echo + digest, one file per run.
void write_manifest(const RunConfig& cfg, const std::string& subcommand,
                    const std::string& path);

} // namespace helm

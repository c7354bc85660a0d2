// Flat key = value run configuration, canonical echo, and the digest that
// tags every report.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace helm {

struct RunConfig {
    // physical setup
    double k = 1.0 / 3.0;
    double d = 0.5;
    double M0 = 1.0 / 48.0;

    // numerics
    int quad_order = 5;
    int spacing_divisor = 30;
    int volterra_steps = 50;

    // sweeps
    std::vector<double> deltas = {1e-1, 1e-2, 1e-3, 1e-4};
    std::vector<double> z0s = {0.4, 0.25, 0.1, 0.05};

    // blow-up demo
    std::vector<int> blowup_ns = {2, 4, 6, 8, 10};
    int blowup_cells = 128;

    // figure emission
    double fig_delta = 1e-3;
    double fig_z0 = 0.05;

    std::string out_dir = ".";
};

/// Parse a flat config file ('#' comments, key = value); unknown keys are a
/// parameter_error so typos never pass silently.
RunConfig load_config(const std::string& path);

/// Apply one key = value override (the CLI flag path).
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

/// Canonical text form: fixed key order, 17-digit floats.  Hashing and
/// re-parsing this string reproduces the run.
std::string config_echo(const RunConfig& cfg);

RunConfig parse_config_text(const std::string& text);

/// FNV-1a 64-bit digest (stable across platforms).
std::uint64_t fnv1a64(const std::string& text);

} // namespace helm

// The reported error metric and its report container.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "helm/types.hpp"

namespace helm {

/// Root-mean-square error over a mode subset at one depth:
/// sqrt((1/card) sum_{window} |exact - approx|^2).  The normalization is by
/// cardinality, not spacing-weighted.  Both fields must share a grid and z0
/// must be one of its z samples.
double error_E(const SpectralField& exact, const SpectralField& approx, double z0,
               const std::vector<std::size_t>& window);

struct ErrorRow {
    double delta = 0.0;
    std::map<double, double, std::greater<double>> e_of_z0;  // z0 -> E(z0)
};

/// Rows sorted by descending delta, tagged with the producing method and the
/// configuration digest.
struct ErrorReport {
    std::string method;
    std::uint64_t config_hash = 0;
    std::vector<ErrorRow> rows;
    std::vector<double> z0_labels;  // column order for CSV output

    void sort_rows();
};

} // namespace helm

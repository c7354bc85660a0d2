// CSV emission with fixed float formatting (byte-identical across runs).

#pragma once

#include <string>
#include <vector>

namespace helm {

/// Scientific notation, 8 significant digits (table style).
std::string fmt_table(double v);

/// 17 significant digits (lossless, figure-data style).
std::string fmt_full(double v);

/// Write header + rows; throws io_error if the path is unwritable.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_text(const std::string& path, const std::string& text);

} // namespace helm

#include "helm/csv.hpp"

#include <cstdio>
#include <fstream>

#include "helm/errors.hpp"

namespace helm {

std::string fmt_table(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8E", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17G", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw io_error("write_csv: cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    if (!out) throw io_error("write_csv: write failed for '" + path + "'");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw io_error("write_text: cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw io_error("write_text: write failed for '" + path + "'");
}

} // namespace helm

#include "helm/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "helm/errors.hpp"

namespace helm {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw parameter_error("config: bad numeric value for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw parameter_error("config: bad integer value for '" + key + "': " + v);
    }
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& v, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse(key, item));
    }
    if (out.empty()) throw parameter_error("config: empty list for '" + key + "'");
    return out;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
std::string join(const std::vector<T>& xs, std::string (*fmt)(T)) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += fmt(xs[i]);
    }
    return out;
}

} // namespace

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "k") cfg.k = parse_double(key, value);
    else if (key == "d") cfg.d = parse_double(key, value);
    else if (key == "M0") cfg.M0 = parse_double(key, value);
    else if (key == "quad_order") cfg.quad_order = parse_int(key, value);
    else if (key == "spacing_divisor") cfg.spacing_divisor = parse_int(key, value);
    else if (key == "volterra_steps") cfg.volterra_steps = parse_int(key, value);
    else if (key == "deltas") cfg.deltas = parse_list<double>(key, value, parse_double);
    else if (key == "z0s") cfg.z0s = parse_list<double>(key, value, parse_double);
    else if (key == "blowup_ns") cfg.blowup_ns = parse_list<int>(key, value, parse_int);
    else if (key == "blowup_cells") cfg.blowup_cells = parse_int(key, value);
    else if (key == "fig_delta") cfg.fig_delta = parse_double(key, value);
    else if (key == "fig_z0") cfg.fig_z0 = parse_double(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else throw parameter_error("config: unknown key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parameter_error("config: line " + std::to_string(lineno) +
                                  " is not 'key = value'");
        apply_override(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string config_echo(const RunConfig& cfg) {
    std::string out;
    out += "k = " + fmt17(cfg.k) + "\n";
    out += "d = " + fmt17(cfg.d) + "\n";
    out += "M0 = " + fmt17(cfg.M0) + "\n";
    out += "quad_order = " + std::to_string(cfg.quad_order) + "\n";
    out += "spacing_divisor = " + std::to_string(cfg.spacing_divisor) + "\n";
    out += "volterra_steps = " + std::to_string(cfg.volterra_steps) + "\n";
    out += "deltas = " + join<double>(cfg.deltas, [](double v) { return fmt17(v); }) + "\n";
    out += "z0s = " + join<double>(cfg.z0s, [](double v) { return fmt17(v); }) + "\n";
    out += "blowup_ns = " +
           join<int>(cfg.blowup_ns, [](int v) { return std::to_string(v); }) + "\n";
    out += "blowup_cells = " + std::to_string(cfg.blowup_cells) + "\n";
    out += "fig_delta = " + fmt17(cfg.fig_delta) + "\n";
    out += "fig_z0 = " + fmt17(cfg.fig_z0) + "\n";
    out += "out_dir = " + cfg.out_dir + "\n";
    return out;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace helm

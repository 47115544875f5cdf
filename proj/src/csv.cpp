#include "gaborpair/csv.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace gaborpair {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string signal_csv(const SampledSignal& s) {
    std::string out = "t,re,im\n";
    for (int j = 0; j < s.size(); ++j) {
        const cdouble v = s[j];
        out += format_double(s.grid().point(j));
        out += ',';
        out += format_double(v.real());
        out += ',';
        out += format_double(v.imag());
        out += '\n';
    }
    return out;
}

std::string zak_csv(const ZakField& z) {
    std::string out = "x,omega,re,im\n";
    for (int i = 0; i < z.n_x; ++i) {
        for (int j = 0; j < z.n_omega; ++j) {
            const cdouble v = z.at(i, j);
            out += format_double(z.x(i));
            out += ',';
            out += format_double(z.omega(j));
            out += ',';
            out += format_double(v.real());
            out += ',';
            out += format_double(v.imag());
            out += '\n';
        }
    }
    return out;
}

std::string theta_csv(const std::vector<double>& grid, int n) {
    std::string out = "omega1,omega2,theta\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out += format_double(static_cast<double>(i) / n);
            out += ',';
            out += format_double(static_cast<double>(j) / n);
            out += ',';
            out += format_double(grid[static_cast<size_t>(i) * n + j]);
            out += '\n';
        }
    }
    return out;
}

} // namespace gaborpair

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "paretond/types.hpp"

namespace paretond {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// shortest round-trip decimal representation of a double
inline void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

}  // namespace detail

/// Point-set file format: a fixed signature line, `d=<int> n=<int>`, then one
/// line of d space-separated coordinates per point. Round-trips bit-exactly.
inline void write_points(const PointSet& s, std::ostream& os) {
    std::string buf;
    buf.reserve(s.size() * s.dim() * 12 + 64);
    buf += "# pareto-points v1\n";
    buf += "d=" + std::to_string(s.dim()) + " n=" + std::to_string(s.size()) + "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::span<const double> p = s[i];
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k > 0) buf += ' ';
            detail::append_double(buf, p[k]);
        }
        buf += '\n';
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

inline void write_points(const PointSet& s, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_points(s, os);
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
}

inline PointSet read_points(std::istream& is, const std::string& origin = "<stream>") {
    auto fail = [&](std::size_t line, const std::string& what) {
        throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
    };
    std::string line;
    if (!std::getline(is, line) || line != "# pareto-points v1") {
        fail(1, "missing point-set signature");
    }
    if (!std::getline(is, line)) fail(2, "missing header");
    std::size_t d = 0;
    std::size_t n = 0;
    if (std::sscanf(line.c_str(), "d=%zu n=%zu", &d, &n) != 2) {
        fail(2, "malformed header, expected d=<int> n=<int>");
    }
    if (d < 2 || d > 64) fail(2, "dimensionality must be in [2, 64]");
    PointSet out(d);
    out.reserve(n);
    std::vector<double> p(d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lineno = i + 3;
        if (!std::getline(is, line)) fail(lineno, "unexpected end of file");
        const char* cur = line.c_str();
        const char* end = cur + line.size();
        for (std::size_t k = 0; k < d; ++k) {
            while (cur < end && *cur == ' ') ++cur;
            auto res = std::from_chars(cur, end, p[k]);
            if (res.ec != std::errc{}) fail(lineno, "expected " + std::to_string(d) + " columns");
            if (!std::isfinite(p[k])) fail(lineno, "non-finite coordinate");
            cur = res.ptr;
        }
        while (cur < end && *cur == ' ') ++cur;
        if (cur != end) fail(lineno, "trailing data, expected " + std::to_string(d) + " columns");
        out.push_back(p);
    }
    return out;
}

inline PointSet read_points(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_points(is, path);
}

}  // namespace paretond

#pragma once

// File formats: record CSV, the scatter SVG, and JSON vector configs.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core.hpp"
#include "errors.hpp"
#include "experiments.hpp"

namespace projsimplex {

/// Malformed input file (CSV or JSON config).
class InputError : public ContractError {
public:
    using ContractError::ContractError;
};

/// Shortest-safe lossless rendering: 17 significant digits.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline constexpr const char* kCsvHeader = "kind,n,seed,d_min,abs_det";

inline void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << kCsvHeader << '\n';
    for (const ExperimentRecord& r : records)
        os << to_string(r.kind) << ',' << r.n << ',' << r.seed << ',' << format_real(r.d_min) << ','
           << format_real(r.abs_det) << '\n';
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(std::move(cur));
    return out;
}

inline double parse_real(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) throw InputError("csv: bad real '" + s + "'");
    return v;
}

inline unsigned long long parse_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("csv: bad integer '" + s + "'");
    return std::strtoull(s.c_str(), nullptr, 10);
}

}  // namespace detail

inline std::vector<ExperimentRecord> read_records_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader) throw InputError("csv: missing or wrong header");
    std::vector<ExperimentRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = detail::split(line, ',');
        if (f.size() != 5) throw InputError("csv: expected 5 fields in '" + line + "'");
        const auto kind = parse_kind(f[0]);
        if (!kind) throw InputError("csv: unknown kind '" + f[0] + "'");
        out.push_back({*kind, static_cast<std::size_t>(detail::parse_uint(f[1])), detail::parse_uint(f[2]),
                       detail::parse_real(f[3]), detail::parse_real(f[4])});
    }
    return out;
}

/// Scatter of |D| (vertical) against d_min (horizontal) on [0,1]^2 with the
/// bounding curves |D| = d_min and |D| = d_min^n. Every data point is one
/// element carrying class "pt": small dots for random records, open circles
/// for isosceles, squares for regular.
inline void write_scatter_svg(std::ostream& os, const std::vector<ExperimentRecord>& records, std::size_t n) {
    constexpr double size = 600.0, margin = 50.0, plot = size - 2.0 * margin;
    auto px = [&](double x) { return format_real(margin + x * plot); };
    auto py = [&](double y) { return format_real(size - margin - y * plot); };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n"
       << "<g stroke=\"black\" stroke-width=\"1\">\n"
       << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0) << "\"/>\n"
       << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1) << "\"/>\n"
       << "</g>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = 0.25 * t;
        os << "<text x=\"" << px(v) << "\" y=\"" << format_real(size - margin + 18) << "\" font-size=\"11\" "
           << "text-anchor=\"middle\">" << v << "</text>\n"
           << "<text x=\"" << format_real(margin - 8) << "\" y=\"" << py(v) << "\" font-size=\"11\" "
           << "text-anchor=\"end\">" << v << "</text>\n";
    }
    os << "<text x=\"" << px(0.5) << "\" y=\"" << format_real(size - 10) << "\" text-anchor=\"middle\">d_min</text>\n"
       << "<text x=\"14\" y=\"" << py(0.5) << "\" text-anchor=\"middle\">|D|</text>\n";

    auto curve = [&](double power, const char* colour) {
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (int i = 0; i <= 200; ++i) {
            const double x = i / 200.0;
            os << px(x) << ',' << py(std::pow(x, power)) << (i < 200 ? " " : "");
        }
        os << "\"/>\n";
    };
    curve(1.0, "#1f77b4");
    curve(static_cast<double>(n), "#d62728");
    os << "<text x=\"" << px(0.30) << "\" y=\"" << py(0.36) << "\" font-size=\"12\" fill=\"#1f77b4\">|D| = d_min</text>\n"
       << "<text x=\"" << px(0.62) << "\" y=\"" << py(0.26) << "\" font-size=\"12\" fill=\"#d62728\">|D| = d_min^" << n
       << "</text>\n";

    for (const ExperimentRecord& r : records) {
        switch (r.kind) {
            case RecordKind::random:
                os << "<circle class=\"pt random\" cx=\"" << px(r.d_min) << "\" cy=\"" << py(r.abs_det)
                   << "\" r=\"1.5\" fill=\"#555555\"/>\n";
                break;
            case RecordKind::isosceles:
                os << "<circle class=\"pt isosceles\" cx=\"" << px(r.d_min) << "\" cy=\"" << py(r.abs_det)
                   << "\" r=\"4\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
                break;
            case RecordKind::regular:
                os << "<rect class=\"pt regular\" x=\"" << format_real(margin + r.d_min * plot - 3.5) << "\" y=\""
                   << format_real(size - margin - r.abs_det * plot - 3.5)
                   << "\" width=\"7\" height=\"7\" fill=\"none\" stroke=\"#d62728\"/>\n";
                break;
        }
    }
    os << "</svg>\n";
}

enum class ConfigMode { vertices, faces };

/// Parsed vector file: {"mode": "vertices"|"faces", "vectors": [[[re, im], ...], ...]}.
struct InputConfig {
    ConfigMode mode = ConfigMode::vertices;
    std::vector<CVector> vectors;
};

inline InputConfig parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("config: top level must be an object");
    InputConfig cfg;
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw InputError("config: mode must be a string");
        const std::string mode = j["mode"].get<std::string>();
        if (mode == "vertices")
            cfg.mode = ConfigMode::vertices;
        else if (mode == "faces")
            cfg.mode = ConfigMode::faces;
        else
            throw InputError("config: mode must be \"vertices\" or \"faces\"");
    }
    if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].empty())
        throw InputError("config: vectors must be a non-empty array");
    std::size_t m = 0;
    for (const auto& row : j["vectors"]) {
        if (!row.is_array() || row.empty()) throw InputError("config: each vector must be a non-empty array");
        if (m == 0) m = row.size();
        if (row.size() != m) throw InputError("config: all vectors must have the same length");
        std::vector<Cplx> c;
        for (const auto& e : row) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw InputError("config: entries must be [re, im] number pairs");
            const double re = e[0].get<double>(), im = e[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) throw InputError("config: non-finite entry");
            c.emplace_back(re, im);
        }
        cfg.vectors.emplace_back(std::move(c));
    }
    const std::size_t rows = cfg.vectors.size();
    if (rows != m && rows != 2)
        throw InputError("config: need as many vectors as their length (simplex) or exactly 2 (pair distance)");
    return cfg;
}

}  // namespace projsimplex

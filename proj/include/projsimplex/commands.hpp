#pragma once

// Command bodies behind the `projsimplex` tool. Each returns the process exit
// code: 0 success, 1 runtime or suite failure, 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "experiments.hpp"
#include "io.hpp"
#include "projective.hpp"
#include "verify.hpp"

namespace projsimplex {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string fmt_sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

inline void print_simplex(std::ostream& out, const Simplex& s) {
    const Cplx d = s.det();
    out << "D        = " << format_real(d.real()) << (d.imag() < 0 ? " - " : " + ") << format_real(std::abs(d.imag()))
        << "i\n";
    out << "|D|      = " << format_real(s.abs_det()) << '\n';
    for (std::size_t j = 0; j < s.distances().size(); ++j)
        out << "d_" << j << std::string(j < 10 ? 6 : 5, ' ') << "= " << format_real(s.distances()[j]) << '\n';
    out << "d_min    = " << format_real(s.d_min()) << '\n';
    const InequalityCheck c = check_inequalities(s);
    out << "lower margin |D| - d_min^" << s.n() << " = " << format_real(c.lower_margin) << '\n';
    out << "upper margin d_min - |D|   = " << format_real(c.upper_margin) << '\n';
    out << "distances tied at d_min    = " << c.near_equality_count << " of " << s.n() + 1 << '\n';
}

}  // namespace detail

inline int cmd_verify(std::size_t max_n, std::size_t samples, std::uint64_t seed, std::ostream& out,
                      std::ostream& err, const Tolerances& tol = default_tolerances) {
    if (max_n < 1) {
        err << "verify: --max-n must be >= 1\n";
        return kExitUsage;
    }
    if (samples < 1) {
        err << "verify: --samples must be >= 1\n";
        return kExitUsage;
    }
    const auto results = run_verification(max_n, samples, seed, tol);
    bool ok = true;
    for (const SuiteOutcome& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << std::right
            << " cases=" << r.cases << " worst=" << detail::fmt_sci(r.worst_residual)
            << " tol=" << detail::fmt_sci(r.tolerance) << '\n';
        if (!r.passed) {
            ok = false;
            out << "     first failure: n=" << r.first_failure_n << " seed=" << r.first_failure_seed
                << " residual=" << format_real(r.first_failure_residual) << " (" << r.failures << " failing cases)\n";
            if (!r.error.empty()) out << "     error: " << r.error << '\n';
        }
    }
    out << (ok ? "all suites passed\n" : "verification FAILED\n");
    return ok ? kExitOk : kExitFailure;
}

inline int cmd_example(double s, std::ostream& out, std::ostream& err) {
    if (!(s > 0.0 && s <= 1.0)) {
        err << "example: s must lie in (0, 1]\n";
        return kExitUsage;
    }
    const Simplex sx = make_isosceles({s});
    const auto g = sx.generators();
    const double ab1 = fs_point_distance(ProjPoint(g[0]), ProjPoint(g[1]));
    const double ab2 = fs_point_distance(ProjPoint(g[0]), ProjPoint(g[2]));
    const double b1b2 = fs_point_distance(ProjPoint(g[1]), ProjPoint(g[2]));
    out << "isosceles triangle in CP^2 with s = " << format_real(s) << '\n';
    out << "a  = [sqrt((1-s^2)/2), sqrt((1-s^2)/2), s], b1 = e0, b2 = e1\n";
    detail::print_simplex(out, sx);
    out << "side |b1^b2| = " << format_real(b1b2) << '\n';
    out << "side |a^b1|  = " << format_real(ab1) << '\n';
    out << "side |a^b2|  = " << format_real(ab2) << '\n';
    out << "expected sides 1, " << format_real(std::sqrt((1.0 + s * s) / 2.0)) << ", "
        << format_real(std::sqrt((1.0 + s * s) / 2.0)) << '\n';
    const bool eq = std::abs(sx.abs_det() - s) <= 1e-12 && std::abs(sx.d_min() - s) <= 1e-12;
    out << (eq ? "confirmed: |D| = d_min = s\n" : "MISMATCH: |D| = d_min = s does not hold\n");
    return eq ? kExitOk : kExitFailure;
}

inline int cmd_figure(std::size_t n, std::size_t count, std::uint64_t seed, const std::string& csv_path,
                      const std::optional<std::string>& svg_path, std::ostream& out, std::ostream& err,
                      std::size_t workers = 1) {
    if (n < 1 || count < 1) {
        err << "figure: --n and --count must be >= 1\n";
        return kExitUsage;
    }
    const auto records = run_figure(n, count, seed, workers);
    std::size_t invalid = 0;
    for (const auto& r : records)
        if (!record_is_valid(r)) ++invalid;
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) {
            err << "figure: cannot open " << csv_path << " for writing\n";
            return kExitFailure;
        }
        write_records_csv(f, records);
        if (!f) {
            err << "figure: write to " << csv_path << " failed\n";
            return kExitFailure;
        }
    }
    if (svg_path) {
        std::ofstream f(*svg_path, std::ios::binary);
        if (!f) {
            err << "figure: cannot open " << *svg_path << " for writing\n";
            return kExitFailure;
        }
        write_scatter_svg(f, records, n);
        if (!f) {
            err << "figure: write to " << *svg_path << " failed\n";
            return kExitFailure;
        }
    }
    out << "wrote " << records.size() << " records to " << csv_path << (svg_path ? " and " + *svg_path : "") << '\n';
    if (invalid > 0) {
        err << "figure: " << invalid << " records violate the sandwich inequality\n";
        return kExitFailure;
    }
    return kExitOk;
}

inline int cmd_conjecture(std::size_t n, double target, std::size_t restarts, std::size_t budget, std::uint64_t seed,
                          std::ostream& out, std::ostream& err, std::size_t workers = 1) {
    if (n < 1 || !(target > 0.0 && target <= 1.0) || restarts < 1) {
        err << "conjecture: need --n >= 1, 0 < --target <= 1, --restarts >= 1\n";
        return kExitUsage;
    }
    const double c = regular_c_for_det(n, target);
    const double reference = regular_distance(n, c);
    auto report = [&](const OptResult& r) {
        out << "n              = " << r.n << '\n'
            << "target |D|     = " << format_real(r.target_det) << '\n'
            << "achieved |D|   = " << format_real(r.achieved_det) << '\n'
            << "best d_min     = " << format_real(r.best_d_min) << '\n'
            << "regular c      = " << format_real(c) << '\n'
            << "regular d_min  = " << format_real(reference) << '\n'
            << "gap            = " << format_real(r.best_d_min - reference) << '\n'
            << "theorem cap    = " << format_real(std::pow(r.achieved_det, 1.0 / static_cast<double>(r.n))) << '\n'
            << "restarts       = " << r.restarts << '\n'
            << "evaluations    = " << r.evaluations << '\n';
    };
    SearchOptions opt;
    opt.workers = workers;
    try {
        const OptResult r = conjecture_search(n, target, restarts, budget, seed, opt);
        report(r);
        if (r.best_d_min > reference + 1e-3)
            out << "note: best d_min exceeds the regular simplex by more than 1e-3 (counter-signal)\n";
        return kExitOk;
    } catch (const SearchFailure& e) {
        err << e.what() << '\n';
        report(e.best_attempt());
        return kExitFailure;
    }
}

inline int cmd_distance(const std::string& path, bool renormalize, std::ostream& out, std::ostream& err) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        err << "distance: cannot read " << path << '\n';
        return kExitUsage;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        InputConfig cfg = parse_config(buf.str());
        if (renormalize)
            for (CVector& v : cfg.vectors) v = normalize(v);
        const std::size_t rows = cfg.vectors.size();
        const std::size_t m = cfg.vectors[0].dim();
        if (rows == m) {
            const Simplex s = cfg.mode == ConfigMode::faces ? simplex_from_faces(cfg.vectors)
                                                            : simplex_from_vertices(cfg.vectors);
            out << "simplex in CP^" << s.n() << " (" << (cfg.mode == ConfigMode::faces ? "faces" : "vertices")
                << ")\n";
            detail::print_simplex(out, s);
        }
        if (rows == 2) {
            const double d = fs_point_distance(ProjPoint(cfg.vectors[0]), ProjPoint(cfg.vectors[1]));
            out << "point distance |u^v| = " << format_real(d) << '\n';
        }
        return kExitOk;
    } catch (const NormalizationError& e) {
        err << "distance: precondition violated (unit vectors required; pass --normalize to rescale): " << e.what()
            << '\n';
    } catch (const DegenerateInputError& e) {
        err << "distance: precondition violated (general position): " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "distance: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace projsimplex

#pragma once

// Randomized identity suites shared by the `verify` command and the tests.
// Every case draws from its own stream so a failure can be replayed from the
// printed seed alone.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "config.hpp"
#include "core.hpp"
#include "exterior.hpp"
#include "hodge.hpp"
#include "projective.hpp"
#include "random.hpp"
#include "experiments.hpp"

namespace projsimplex {

/// |a - b| / max(|a|, |b|, scale). With scale = 0 this is the plain relative
/// difference; scale = 1 bounds it by the absolute error for O(1) quantities.
inline double rel_residual(Cplx a, Cplx b, double scale = 0.0) {
    const double denom = std::max({std::abs(a), std::abs(b), scale});
    return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

inline std::vector<CVector> random_family(std::size_t count, std::size_t m, Rng& rng) {
    std::vector<CVector> vs;
    vs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) vs.push_back(random_unit_vector(m, rng));
    return vs;
}

inline Blade random_blade(std::size_t m, std::size_t k, Rng& rng) {
    std::vector<Cplx> c(binomial(m, k));
    for (Cplx& z : c) z = complex_normal(rng);
    return Blade(m, k, std::move(c));
}

/// One randomized check: maps (n, rng) to a non-negative residual.
struct IdentitySuite {
    std::string name;
    double tolerance;
    std::size_t min_n;
    std::function<double(std::size_t n, Rng& rng)> residual;
};

namespace checks {

inline double gramian(std::size_t n, Rng& rng) {
    const std::size_t m = n + 1;
    const std::size_t k = 1 + rng() % m;
    const auto vs = random_family(k, m, rng);
    const auto ws = random_family(k, m, rng);
    return rel_residual(blade_dot(wedge(vs), wedge(ws)), gram_det(vs, ws, false), 1.0);
}

inline double gramian_hermitian(std::size_t n, Rng& rng) {
    const std::size_t m = n + 1;
    const std::size_t k = 1 + rng() % m;
    const auto vs = random_family(k, m, rng);
    const Cplx g = gram_det(vs, vs, true);
    const double w = blade_herm_norm(wedge(vs));
    return std::max(rel_residual(w * w, g.real(), 1.0), std::abs(g.imag()));
}

inline double isometry(std::size_t n, Rng& rng) {
    const Blade x = random_blade(n + 1, n, rng);
    return rel_residual(herm_norm(l_map(x)), blade_herm_norm(x));
}

inline double box_product(std::size_t n, Rng& rng) {
    const auto rows = random_family(n + 1, n + 1, rng);
    const std::vector<CVector> bs(rows.begin() + 1, rows.end());
    return rel_residual(box_det(rows[0], bs), determinant_of_rows(rows), 1.0);
}

inline double cofactor_oracle(std::size_t n, Rng& rng) {
    const std::size_t m = std::min<std::size_t>(n + 1, kCofactorMaxSize);
    const CMatrix a = CMatrix::from_rows(random_family(m, m, rng));
    return rel_residual(determinant(a), determinant_cofactor(a), 1.0);
}

inline double lagrange(std::size_t n, Rng& rng) {
    const std::size_t m = n + 1;
    const auto vs = random_family(n - 1, m, rng);
    const auto ws = random_family(n, m, rng);
    const CVector formula = lagrange_vector(vs, ws);
    std::vector<CVector> chain(vs);
    chain.push_back(l_map(wedge(ws)));
    const CVector direct = l_map(wedge(chain));
    double r = 0.0;
    for (std::size_t i = 0; i < m; ++i) r = std::max(r, rel_residual(formula[i], direct[i], 1.0));

    // z . b against the scalar determinant with first row (z . w_j).
    const CVector z = random_unit_vector(m, rng);
    std::vector<Cplx> g(n * n);
    for (std::size_t j = 0; j < n; ++j) g[j] = dot(z, ws[j]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[(i + 1) * n + j] = dot(vs[i], ws[j]);
    Cplx scalar = determinant(CMatrix(n, g));
    if (n % 2 == 1) scalar = -scalar;
    return std::max(r, rel_residual(dot(z, formula), scalar, 1.0));
}

inline double multicross_norm(std::size_t n, Rng& rng) {
    const auto us = random_family(n + 1, n + 1, rng);
    const std::vector<CVector> rest(us.begin() + 1, us.end());
    const MulticrossResult mc = multicross(us[0], rest);
    const double expect = std::pow(std::abs(mc.det), static_cast<double>(n - 1)) * herm_norm(us[0]);
    return rel_residual(herm_norm(mc.result), expect);
}

inline double multicross_collinear(std::size_t n, Rng& rng) {
    const auto us = random_family(n + 1, n + 1, rng);
    const std::vector<CVector> rest(us.begin() + 1, us.end());
    const MulticrossResult mc = multicross(us[0], rest);
    return rel_residual(std::abs(dot(mc.result, us[0].conj())), herm_norm(mc.result) * herm_norm(us[0]));
}

inline double sandwich(std::size_t n, Rng& rng) {
    const Simplex s = sample_random_simplex(n, rng);
    const double ad = s.abs_det();
    const double lower = std::max(0.0, std::pow(s.d_min(), static_cast<double>(n)) - ad) / ad;
    const double upper = std::max(0.0, ad - s.d_min()) / s.d_min();
    return std::max(lower, upper);
}

inline double duality_formula(std::size_t n, Rng& rng) {
    const auto us = random_family(n + 1, n + 1, rng);
    const Simplex s = simplex_from_faces(us);
    double r = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double formula = s.abs_det() / blade_herm_norm(wedge(detail::without(us, j)));
        r = std::max(r, rel_residual(s.distances()[j], formula));
    }
    return r;
}

inline double duality_dual_vertex(std::size_t n, Rng& rng) {
    const auto us = random_family(n + 1, n + 1, rng);
    const Simplex s = simplex_from_faces(us);
    double r = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double d = fs_point_hyperplane_distance(ProjPoint(s.dual_vertices()[j]), ProjHyperplane(us[j]));
        r = std::max(r, rel_residual(s.distances()[j], d));
    }
    return r;
}

inline double simplex_difference(const Simplex& a, const Simplex& b) {
    double r = rel_residual(a.abs_det(), b.abs_det());
    for (std::size_t j = 0; j < a.distances().size(); ++j)
        r = std::max(r, rel_residual(a.distances()[j], b.distances()[j]));
    return r;
}

inline double gauge_phase(std::size_t n, Rng& rng) {
    const Simplex s = sample_random_simplex(n, rng);
    std::vector<CVector> g(s.generators().begin(), s.generators().end());
    const std::size_t j = rng() % g.size();
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    g[j] = std::polar(1.0, theta) * g[j];
    return simplex_difference(s, simplex_from_vertices(g));
}

inline double gauge_unitary(std::size_t n, Rng& rng) {
    const Simplex s = sample_random_simplex(n, rng);
    const CMatrix u = random_unitary(n + 1, rng);
    std::vector<CVector> g;
    for (const CVector& v : s.generators()) g.push_back(apply(u, v));
    return simplex_difference(s, simplex_from_vertices(g));
}

}  // namespace checks

inline std::vector<IdentitySuite> identity_suites(const Tolerances& tol = default_tolerances) {
    return {
        {"gramian", tol.identity_rel, 1, checks::gramian},
        {"gramian-hermitian", tol.identity_rel, 1, checks::gramian_hermitian},
        {"isometry", tol.isometry_rel, 1, checks::isometry},
        {"box-product", tol.determinant_rel, 1, checks::box_product},
        {"cofactor-oracle", tol.determinant_rel, 1, checks::cofactor_oracle},
        {"lagrange", tol.identity_rel, 1, checks::lagrange},
        {"multicross-norm", tol.multicross_rel, 1, checks::multicross_norm},
        {"multicross-collinear", tol.multicross_rel, 1, checks::multicross_collinear},
        {"sandwich", tol.sandwich_slack, 1, checks::sandwich},
        {"duality-formula", tol.isometry_rel, 1, checks::duality_formula},
        {"duality-dual-vertex", tol.identity_rel, 1, checks::duality_dual_vertex},
        {"gauge-phase", tol.gauge_rel, 1, checks::gauge_phase},
        {"gauge-unitary", tol.gauge_rel, 1, checks::gauge_unitary},
    };
}

struct SuiteOutcome {
    std::string name;
    double tolerance = 0.0;
    std::size_t cases = 0;
    double worst_residual = 0.0;
    std::size_t worst_n = 0;
    std::uint64_t worst_seed = 0;
    bool passed = true;
    std::size_t failures = 0;
    std::size_t first_failure_n = 0;
    std::uint64_t first_failure_seed = 0;
    double first_failure_residual = 0.0;
    std::string error;  // exception text if a case threw
};

/// Case seed for (suite index, n, sample index) under a master seed.
inline std::uint64_t case_seed(std::uint64_t master, std::size_t suite, std::size_t n, std::size_t i) {
    return stream_seed(stream_seed(stream_seed(master, suite), n), i);
}

inline SuiteOutcome run_suite(const IdentitySuite& suite, std::size_t suite_index, std::size_t max_n,
                              std::size_t samples, std::uint64_t seed) {
    SuiteOutcome out;
    out.name = suite.name;
    out.tolerance = suite.tolerance;
    for (std::size_t n = suite.min_n; n <= max_n; ++n)
        for (std::size_t i = 0; i < samples; ++i) {
            const std::uint64_t cs = case_seed(seed, suite_index, n, i);
            Rng rng(cs);
            double r = 0.0;
            try {
                r = suite.residual(n, rng);
            } catch (const std::exception& e) {
                r = std::numeric_limits<double>::infinity();
                if (out.error.empty()) out.error = e.what();
            }
            ++out.cases;
            if (!(r <= out.worst_residual)) {
                out.worst_residual = r;
                out.worst_n = n;
                out.worst_seed = cs;
            }
            if (!(r <= suite.tolerance)) {
                if (out.failures++ == 0) {
                    out.first_failure_n = n;
                    out.first_failure_seed = cs;
                    out.first_failure_residual = r;
                }
                out.passed = false;
            }
        }
    return out;
}

inline std::vector<SuiteOutcome> run_verification(std::size_t max_n, std::size_t samples, std::uint64_t seed,
                                                  const Tolerances& tol = default_tolerances) {
    std::vector<SuiteOutcome> out;
    const auto suites = identity_suites(tol);
    for (std::size_t i = 0; i < suites.size(); ++i) out.push_back(run_suite(suites[i], i, max_n, samples, seed));
    return out;
}

}  // namespace projsimplex

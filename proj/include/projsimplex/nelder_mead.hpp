#pragma once

// Derivative-free simplex descent (Nelder-Mead) with dimension-adaptive
// coefficients and restarts around the incumbent once the simplex collapses.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace projsimplex {

struct NelderMeadOptions {
    std::size_t max_evals = 10000;
    double initial_step = 0.1;
    double f_tol = 1e-14;     // collapse test on the spread of simplex values
    double min_step = 1e-9;   // stop restarting once the restart step drops below
    bool adaptive = true;     // Gao-Han coefficients, better in high dimension
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    std::size_t evals = 0;
};

/// Minimizes f over R^N starting from x0. Deterministic.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& opt = {}) {
    const std::size_t dim = x0.size();
    const double nd = static_cast<double>(std::max<std::size_t>(dim, 1));
    const double alpha = 1.0;
    const double gamma = opt.adaptive ? 1.0 + 2.0 / nd : 2.0;
    const double rho = opt.adaptive ? 0.75 - 1.0 / (2.0 * nd) : 0.5;
    const double sigma = opt.adaptive ? 1.0 - 1.0 / nd : 0.5;

    NelderMeadResult best;
    best.x = x0;
    if (opt.max_evals == 0) return best;
    best.f = f(best.x);
    best.evals = 1;
    if (dim == 0) return best;

    std::vector<std::vector<double>> pts(dim + 1);
    std::vector<double> fv(dim + 1);
    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);

    auto budget_left = [&] { return best.evals < opt.max_evals; };
    auto eval = [&](const std::vector<double>& x) {
        ++best.evals;
        return f(x);
    };

    double step = opt.initial_step;
    while (budget_left() && step >= opt.min_step) {
        const double f_start = best.f;
        pts[0] = best.x;
        fv[0] = best.f;
        for (std::size_t i = 0; i < dim && budget_left(); ++i) {
            pts[i + 1] = best.x;
            pts[i + 1][i] += step;
            fv[i + 1] = eval(pts[i + 1]);
        }
        if (!budget_left()) break;

        for (;;) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            const std::size_t lo = order.front();
            const std::size_t hi = order.back();
            const std::size_t nh = order[dim - 1];
            if (std::abs(fv[hi] - fv[lo]) <= opt.f_tol * (1.0 + std::abs(fv[lo])) || !budget_left()) break;

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t k = 0; k < dim; ++k) {
                const auto& p = pts[order[k]];
                for (std::size_t i = 0; i < dim; ++i) centroid[i] += p[i];
            }
            for (double& c : centroid) c /= nd;

            for (std::size_t i = 0; i < dim; ++i) xr[i] = centroid[i] + alpha * (centroid[i] - pts[hi][i]);
            const double fr = eval(xr);
            if (fr < fv[lo]) {
                if (!budget_left()) {
                    pts[hi] = xr;
                    fv[hi] = fr;
                    break;
                }
                for (std::size_t i = 0; i < dim; ++i) xe[i] = centroid[i] + gamma * (xr[i] - centroid[i]);
                const double fe = eval(xe);
                if (fe < fr) {
                    pts[hi] = xe;
                    fv[hi] = fe;
                } else {
                    pts[hi] = xr;
                    fv[hi] = fr;
                }
                continue;
            }
            if (fr < fv[nh]) {
                pts[hi] = xr;
                fv[hi] = fr;
                continue;
            }
            if (!budget_left()) break;
            const bool outside = fr < fv[hi];
            for (std::size_t i = 0; i < dim; ++i)
                xc[i] = outside ? centroid[i] + rho * (xr[i] - centroid[i])
                                : centroid[i] + rho * (pts[hi][i] - centroid[i]);
            const double fc = eval(xc);
            if (fc < (outside ? fr : fv[hi])) {
                pts[hi] = xc;
                fv[hi] = fc;
                continue;
            }
            // Shrink toward the best vertex.
            for (std::size_t k = 1; k <= dim && budget_left(); ++k) {
                auto& p = pts[order[k]];
                for (std::size_t i = 0; i < dim; ++i) p[i] = pts[lo][i] + sigma * (p[i] - pts[lo][i]);
                fv[order[k]] = eval(p);
            }
        }

        for (std::size_t k = 0; k <= dim; ++k)
            if (fv[k] < best.f) {
                best.f = fv[k];
                best.x = pts[k];
            }
        // Restart at the same scale while it keeps paying off, otherwise refine.
        if (!(best.f < f_start - opt.f_tol * (1.0 + std::abs(f_start)))) step *= 0.1;
    }
    return best;
}

}  // namespace projsimplex

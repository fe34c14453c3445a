#pragma once

// Random simplex sampling, the |D| versus d_min scatter data, the equality
// census, and the penalized derivative-free search for the largest d_min at
// a fixed |D|.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "config.hpp"
#include "core.hpp"
#include "nelder_mead.hpp"
#include "projective.hpp"
#include "random.hpp"

namespace projsimplex {

/// Runs f(0..count-1) on up to `workers` threads and returns results in
/// index order. Each call must depend only on its index.
template <class F>
auto parallel_indexed(std::size_t count, std::size_t workers, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) slots[i].emplace(f(i));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

inline constexpr int kMaxSampleTries = 1000;

/// n+1 i.i.d. complex Gaussian vectors, normalized, resampled while |D| is
/// at or below `tol.sample_reject`.
inline Simplex sample_random_simplex(std::size_t n, Rng& rng, const Tolerances& tol = default_tolerances) {
    if (n < 1) throw ContractError("sample_random_simplex: n must be >= 1");
    const std::size_t m = n + 1;
    for (int attempt = 0; attempt < kMaxSampleTries; ++attempt) {
        std::vector<CVector> us;
        us.reserve(m);
        for (std::size_t j = 0; j < m; ++j) us.push_back(random_unit_vector(m, rng));
        if (std::abs(determinant_of_rows(us)) <= tol.sample_reject) continue;
        return simplex_from_vertices(us, tol);
    }
    throw SamplingError("sample_random_simplex: no sample in general position after 1000 tries");
}

enum class RecordKind { random, isosceles, regular };

inline const char* to_string(RecordKind k) {
    switch (k) {
        case RecordKind::random: return "random";
        case RecordKind::isosceles: return "isosceles";
        case RecordKind::regular: return "regular";
    }
    return "?";
}

inline std::optional<RecordKind> parse_kind(std::string_view s) {
    if (s == "random") return RecordKind::random;
    if (s == "isosceles") return RecordKind::isosceles;
    if (s == "regular") return RecordKind::regular;
    return std::nullopt;
}

/// One scatter point. For random records `seed` is the stream seed that
/// regenerates the simplex via sample_random_simplex(n, Rng(seed)); sweep
/// records carry 0.
struct ExperimentRecord {
    RecordKind kind = RecordKind::random;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double d_min = 0.0;
    double abs_det = 0.0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Sandwich check with relative slack, plus |D| = d_min for isosceles rows.
inline bool record_is_valid(const ExperimentRecord& r, const Tolerances& tol = default_tolerances) {
    const double slack = 1.0 + tol.sandwich_slack;
    const bool lower = std::pow(r.d_min, static_cast<double>(r.n)) <= r.abs_det * slack;
    const bool upper = r.abs_det * slack <= r.d_min * slack * slack;
    const bool kind_ok = r.kind != RecordKind::isosceles || std::abs(r.abs_det - r.d_min) <= tol.sandwich_slack;
    return lower && upper && kind_ok;
}

inline ExperimentRecord to_record(RecordKind kind, std::uint64_t seed, const Simplex& s) {
    return {kind, s.n(), seed, s.d_min(), s.abs_det()};
}

inline constexpr int kSweepSteps = 20;  // parameter grid 0.05, 0.10, ...

/// `count` random records (stream i seeded from (seed, i)), then for n = 2
/// the isosceles sweep s = 0.05..1.00, then the regular sweep c = 0.05..0.95.
inline std::vector<ExperimentRecord> run_figure(std::size_t n, std::size_t count, std::uint64_t seed,
                                                std::size_t workers = 1) {
    if (n < 1) throw ContractError("run_figure: n must be >= 1");
    if (count < 1) throw ContractError("run_figure: count must be >= 1");
    auto records = parallel_indexed(count, workers, [&](std::size_t i) {
        const std::uint64_t s = stream_seed(seed, i);
        Rng rng(s);
        return to_record(RecordKind::random, s, sample_random_simplex(n, rng));
    });
    if (n == 2)
        for (int k = 1; k <= kSweepSteps; ++k)
            records.push_back(to_record(RecordKind::isosceles, 0, make_isosceles({0.05 * k})));
    for (int k = 1; k < kSweepSteps; ++k)
        records.push_back(to_record(RecordKind::regular, 0, make_regular({n, 0.05 * k})));
    return records;
}

struct CensusReport {
    std::size_t samples = 0;        // simplices examined (random + injected)
    std::size_t near_equality = 0;  // lower_margin <= tol.near_equality
    std::size_t with_n_ties = 0;    // ... of which near_equality_count >= n
    std::optional<double> fraction; // with_n_ties / near_equality, if any
};

/// Among random (and injected) simplices whose lower margin |D| - d_min^n is
/// within the near-equality band, the share with at least n distances tied at d_min.
inline CensusReport equality_census(std::size_t n, std::size_t count, std::uint64_t seed,
                                    std::span<const Simplex> injected = {}, const Tolerances& tol = default_tolerances) {
    if (count < 1) throw ContractError("equality_census: count must be >= 1");
    CensusReport r;
    auto visit = [&](const Simplex& s) {
        ++r.samples;
        const InequalityCheck c = check_inequalities(s, tol);
        if (c.lower_margin <= tol.near_equality) {
            ++r.near_equality;
            if (c.near_equality_count >= s.n()) ++r.with_n_ties;
        }
    };
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = make_stream(seed, i);
        visit(sample_random_simplex(n, rng, tol));
    }
    for (const Simplex& s : injected) visit(s);
    if (r.near_equality > 0) r.fraction = static_cast<double>(r.with_n_ties) / static_cast<double>(r.near_equality);
    return r;
}

// ---------------------------------------------------------------------------
// Conjecture search

struct OptResult {
    std::size_t n = 0;
    double target_det = 0.0;
    double best_d_min = 0.0;
    double achieved_det = 0.0;
    std::size_t restarts = 0;
    std::size_t evaluations = 0;
    std::vector<CVector> best_generators;
};

/// No restart produced a configuration within the feasibility band.
class SearchFailure : public std::runtime_error {
public:
    SearchFailure(const std::string& what, OptResult best) : std::runtime_error(what), best_(std::move(best)) {}
    const OptResult& best_attempt() const { return best_; }

private:
    OptResult best_;
};

struct SearchOptions {
    double penalty = 1e3;           // lambda in d_min - lambda (|D| - target)^2
    double initial_step = 0.2;
    std::size_t workers = 1;
    bool restore_feasibility = true;  // bisect onto |D| = target after each local search
    Tolerances tol = default_tolerances;
};

namespace detail {

inline std::vector<CVector> unpack_generators(std::span<const double> x, std::size_t m) {
    std::vector<CVector> us;
    us.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Cplx> c(m);
        double nn = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            c[i] = {x[2 * (j * m + i)], x[2 * (j * m + i) + 1]};
            nn += std::norm(c[i]);
        }
        const double s = nn > 0.0 ? 1.0 / std::sqrt(nn) : 0.0;
        for (Cplx& z : c) z *= s;
        us.emplace_back(std::move(c));
    }
    return us;
}

inline std::vector<double> pack_generators(std::span<const CVector> us) {
    std::vector<double> x;
    for (const CVector& u : us)
        for (Cplx z : u) {
            x.push_back(z.real());
            x.push_back(z.imag());
        }
    return x;
}

struct DetAndMin {
    double abs_det = 0.0;
    double d_min = 0.0;
};

// |D| and d_min = min_j |D| / |wedge of the others|, with |wedge|^2 taken
// as the Hermitian Gram determinant. No validation; degenerate input gives 0.
inline DetAndMin det_and_min_distance(std::span<const CVector> us) {
    DetAndMin r;
    r.abs_det = std::abs(determinant_of_rows(us));
    if (!(r.abs_det > 0.0)) return r;
    double dm = 1.0;
    for (std::size_t j = 0; j < us.size(); ++j) {
        const auto others = without(us, j);
        const double w2 = std::abs(gram_det(others, others, true));
        const double d = w2 > 0.0 ? r.abs_det / std::sqrt(w2) : 1.0;
        dm = std::min(dm, d);
    }
    r.d_min = dm;
    return r;
}

inline std::vector<CVector> blend(std::span<const CVector> from, std::span<const CVector> to, double t,
                                  std::size_t only = static_cast<std::size_t>(-1)) {
    std::vector<CVector> r;
    r.reserve(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        if (only != static_cast<std::size_t>(-1) && j != only) {
            r.push_back(from[j]);
            continue;
        }
        r.push_back(normalize(Cplx(1.0 - t) * from[j] + Cplx(t) * to[j]));
    }
    return r;
}

// Moves the configuration along a continuous path on which |D| crosses the
// target and bisects for the crossing. Raising |D|: blend every generator
// toward its Gram-Schmidt partner (|D| = 1 at the end). Lowering |D|: blend
// the last generator toward the first (|D| = 0 at the end).
inline std::optional<std::vector<CVector>> restore_det(std::span<const CVector> us, double target) {
    const double cur = std::abs(determinant_of_rows(us));
    if (cur == target) return std::vector<CVector>(us.begin(), us.end());
    std::vector<CVector> to;
    std::size_t only = static_cast<std::size_t>(-1);
    try {
        if (cur < target) {
            to = orthonormalize(us);
        } else {
            to.assign(us.begin(), us.end());
            only = us.size() - 1;
            to[only] = us[0];
        }
        auto f = [&](double t) { return std::abs(determinant_of_rows(blend(us, to, t, only))) - target; };
        double lo = 0.0, hi = 1.0;
        const bool rising = cur < target;
        if (rising && f(1.0) < 0.0) return std::nullopt;
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if ((f(mid) < 0.0) == rising)
                lo = mid;
            else
                hi = mid;
        }
        const double flo = std::abs(f(lo)), fhi = std::abs(f(hi));
        return blend(us, to, flo <= fhi ? lo : hi, only);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace detail

/// Maximizes d_min - lambda (|D| - target)^2 over n+1 vectors in C^{n+1}
/// (2(n+1)^2 real parameters, each vector normalized per evaluation) by
/// Nelder-Mead from `restarts` random starts. Restart r draws from stream
/// (seed, r), so results do not depend on the worker count.
inline OptResult conjecture_search(std::size_t n, double target_det, std::size_t restarts,
                                   std::size_t budget_per_restart, std::uint64_t seed,
                                   const SearchOptions& opt = {}) {
    if (n < 1) throw ParameterError("conjecture_search: n must be >= 1");
    if (!(target_det > 0.0 && target_det <= 1.0)) throw ParameterError("conjecture_search: target must lie in (0, 1]");
    if (restarts < 1) throw ParameterError("conjecture_search: restarts must be >= 1");
    const std::size_t m = n + 1;

    struct Attempt {
        std::vector<CVector> gens;
        double abs_det = 0.0;
        double d_min = 0.0;
        std::size_t evals = 0;
        bool feasible = false;
    };

    auto run_one = [&](std::size_t r) -> Attempt {
        Rng rng = make_stream(seed, r);
        std::vector<CVector> start;
        for (std::size_t j = 0; j < m; ++j) start.push_back(random_unit_vector(m, rng));

        auto objective = [&](const std::vector<double>& x) {
            const auto us = detail::unpack_generators(x, m);
            const auto v = detail::det_and_min_distance(us);
            const double gap = v.abs_det - target_det;
            return -(v.d_min - opt.penalty * gap * gap);
        };
        NelderMeadOptions nm;
        nm.max_evals = budget_per_restart;
        nm.initial_step = opt.initial_step;
        const NelderMeadResult res = nelder_mead(objective, detail::pack_generators(start), nm);

        Attempt a;
        a.evals = res.evals;
        a.gens = detail::unpack_generators(res.x, m);
        if (opt.restore_feasibility)
            if (auto fixed = detail::restore_det(a.gens, target_det)) a.gens = std::move(*fixed);
        const auto v = detail::det_and_min_distance(a.gens);
        a.abs_det = v.abs_det;
        a.d_min = v.d_min;
        if (std::abs(a.abs_det - target_det) <= opt.tol.det_feasibility) {
            try {
                const Simplex s = simplex_from_vertices(a.gens, opt.tol);
                a.abs_det = s.abs_det();
                a.d_min = s.d_min();
                a.feasible = std::abs(a.abs_det - target_det) <= opt.tol.det_feasibility;
            } catch (const std::exception&) {
                a.feasible = false;
            }
        }
        return a;
    };

    const auto attempts = parallel_indexed(restarts, opt.workers, run_one);

    OptResult out;
    out.n = n;
    out.target_det = target_det;
    out.restarts = restarts;
    const Attempt* best = nullptr;
    const Attempt* closest = nullptr;
    for (const Attempt& a : attempts) {
        out.evaluations += a.evals;
        if (a.feasible && (!best || a.d_min > best->d_min)) best = &a;
        if (!closest || std::abs(a.abs_det - target_det) < std::abs(closest->abs_det - target_det)) closest = &a;
    }
    const Attempt* pick = best ? best : closest;
    out.best_d_min = pick->d_min;
    out.achieved_det = pick->abs_det;
    out.best_generators = pick->gens;
    if (!best) throw SearchFailure("conjecture_search: no feasible configuration within budget", out);
    return out;
}

}  // namespace projsimplex

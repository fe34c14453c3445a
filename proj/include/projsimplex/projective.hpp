#pragma once

// Points, hyperplanes and simplices in CP^n, with Fubini-Study (chordal)
// distances and the determinant/distance sandwich d_min^n <= |D| <= d_min.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "core.hpp"
#include "exterior.hpp"
#include "hodge.hpp"

namespace projsimplex {

inline bool is_unit(const CVector& v, double tol = default_tolerances.unit_norm) {
    return std::abs(herm_norm(v) - 1.0) <= tol;
}

/// v / |v|. Throws DegenerateInputError on the zero vector.
inline CVector normalize(const CVector& v) {
    const double n = herm_norm(v);
    if (n == 0.0) throw DegenerateInputError("normalize: zero vector");
    return Cplx(1.0 / n) * v;
}

namespace detail {
inline void require_unit(const CVector& v, double tol, const char* what) {
    if (!is_unit(v, tol))
        throw NormalizationError(std::string(what) + ": vector is not unit (|v| = " + std::to_string(herm_norm(v)) +
                                 ")");
}
}  // namespace detail

/// Point of CP^n given by a unit representative.
class ProjPoint {
public:
    explicit ProjPoint(CVector rep, double tol = default_tolerances.unit_norm) : rep_(std::move(rep)) {
        detail::require_unit(rep_, tol, "ProjPoint");
    }
    const CVector& rep() const { return rep_; }

private:
    CVector rep_;
};

/// Hyperplane {x : v . x = 0} given by a unit coefficient vector v.
class ProjHyperplane {
public:
    explicit ProjHyperplane(CVector rep, double tol = default_tolerances.unit_norm) : rep_(std::move(rep)) {
        detail::require_unit(rep_, tol, "ProjHyperplane");
    }
    const CVector& rep() const { return rep_; }

private:
    CVector rep_;
};

/// |p ^ q|, in [0, 1].
inline double fs_point_distance(const ProjPoint& p, const ProjPoint& q) {
    if (p.rep().dim() != q.rep().dim()) throw ContractError("fs_point_distance: dimension mismatch");
    if (p.rep().dim() < 2) return 0.0;
    return blade_herm_norm(wedge({p.rep(), q.rep()}));
}

/// min |u ^ x| over unit x with v . x = 0. The minimum is |u . v|.
inline double fs_point_hyperplane_distance(const ProjPoint& u, const ProjHyperplane& v) {
    return std::abs(dot(u.rep(), v.rep()));
}

/// Distance from the point a to the hyperplane spanned by b_1..b_n:
/// |det(a, b_1..b_n)| / |b_1 ^ ... ^ b_n|.
inline double vertex_opposite_distance(const CVector& a, std::span<const CVector> bs,
                                       const Tolerances& tol = default_tolerances) {
    detail::require_unit(a, tol.unit_norm, "vertex_opposite_distance");
    for (const CVector& b : bs) detail::require_unit(b, tol.unit_norm, "vertex_opposite_distance");
    const double box = std::abs(box_det(a, bs));
    if (box <= tol.independence) throw DegenerateInputError("vertex_opposite_distance: points are not in general position");
    if (bs.empty()) return 1.0;
    return box / blade_herm_norm(wedge(bs));
}

enum class SimplexMode { vertices, faces };

/// n+1 unit generators in general position, read as vertices or as faces,
/// with the cached determinant and the per-index distances d_j.
class Simplex {
public:
    std::size_t n() const { return gens_.size() - 1; }
    SimplexMode mode() const { return mode_; }
    std::span<const CVector> generators() const { return gens_; }
    Cplx det() const { return det_; }
    double abs_det() const { return std::abs(det_); }
    std::span<const double> distances() const { return dists_; }
    double d_min() const { return d_min_; }
    /// Face mode only: unit vertex opposite face j (intersection of the other faces).
    std::span<const CVector> dual_vertices() const { return duals_; }

private:
    Simplex() = default;

    static Simplex build(std::span<const CVector> us, SimplexMode mode, const Tolerances& tol) {
        if (us.size() < 2) throw ContractError("simplex: need n+1 >= 2 generators");
        const std::size_t m = us.size();
        for (const CVector& u : us) {
            if (u.dim() != m) throw ContractError("simplex: need n+1 generators in C^{n+1}");
            detail::require_unit(u, tol.unit_norm, "simplex");
        }
        Simplex s;
        s.mode_ = mode;
        s.gens_.assign(us.begin(), us.end());
        s.det_ = determinant_of_rows(us);
        if (std::abs(s.det_) <= tol.independence)
            throw DegenerateInputError("simplex: generators are not in general position (|D| = " +
                                       std::to_string(std::abs(s.det_)) + ")");
        s.dists_.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            const auto others = detail::without(us, j);
            s.dists_.push_back(vertex_opposite_distance(us[j], others, tol));
            if (mode == SimplexMode::faces) s.duals_.push_back(normalize(generalized_cross(others)));
        }
        s.d_min_ = *std::min_element(s.dists_.begin(), s.dists_.end());
        s.check(tol);
        return s;
    }

    void check(const Tolerances& tol) const {
        const double ad = abs_det();
        const double lo = std::pow(d_min_, static_cast<double>(n()));
        for (double d : dists_)
            if (!(d > 0.0) || d > 1.0 + tol.unit_norm)
                throw DegenerateInputError("simplex: distance outside (0, 1], input too ill-conditioned");
        if (lo > ad * (1.0 + tol.sandwich_slack) || ad > d_min_ * (1.0 + tol.sandwich_slack))
            throw DegenerateInputError("simplex: sandwich check failed numerically, input too ill-conditioned");
    }

    friend Simplex simplex_from_vertices(std::span<const CVector>, const Tolerances&);
    friend Simplex simplex_from_faces(std::span<const CVector>, const Tolerances&);

    SimplexMode mode_ = SimplexMode::vertices;
    std::vector<CVector> gens_;
    Cplx det_{};
    std::vector<double> dists_;
    double d_min_ = 0.0;
    std::vector<CVector> duals_;
};

/// d_j is the distance from vertex j to the hyperplane through the others.
inline Simplex simplex_from_vertices(std::span<const CVector> us, const Tolerances& tol = default_tolerances) {
    return Simplex::build(us, SimplexMode::vertices, tol);
}

/// Generators are linear forms; d_j is the distance from hyperplane j to the
/// vertex where the other n hyperplanes meet. Same |det|/|wedge| formula.
inline Simplex simplex_from_faces(std::span<const CVector> us, const Tolerances& tol = default_tolerances) {
    return Simplex::build(us, SimplexMode::faces, tol);
}

struct IsoscelesParams {
    double s = 1.0;
};

struct RegularParams {
    std::size_t n = 2;
    double c = 0.0;
};

/// The isosceles triangle in CP^2: a = [sqrt((1-s^2)/2), sqrt((1-s^2)/2), s],
/// b_1 = e_0, b_2 = e_1. Lies on |D| = d_min = s.
inline Simplex make_isosceles(IsoscelesParams p) {
    if (!(p.s > 0.0 && p.s <= 1.0)) throw ParameterError("make_isosceles: s must lie in (0, 1]");
    const double t = std::sqrt((1.0 - p.s * p.s) / 2.0);
    const std::vector<CVector> gens{CVector{t, t, p.s}, CVector::basis(3, 0), CVector::basis(3, 1)};
    return simplex_from_vertices(gens);
}

/// Rows of the symmetric square root of (1-c) I + c J, so every pair of
/// generators has Hermitian pairing exactly c.
inline std::vector<CVector> regular_generators(RegularParams p) {
    if (p.n < 1) throw ParameterError("make_regular: n must be >= 1");
    if (!(p.c >= 0.0 && p.c < 1.0)) throw ParameterError("make_regular: c must lie in [0, 1)");
    const std::size_t m = p.n + 1;
    const double nn = static_cast<double>(p.n);
    const double diag = std::sqrt(1.0 - p.c);
    const double off = (std::sqrt(1.0 + nn * p.c) - diag) / static_cast<double>(m);
    std::vector<CVector> gens;
    gens.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Cplx> row(m, off);
        row[i] += diag;
        gens.push_back(normalize(CVector(std::move(row))));
    }
    return gens;
}

inline Simplex make_regular(RegularParams p) { return simplex_from_vertices(regular_generators(p)); }

/// Closed forms for the regular simplex: |D| = sqrt((1-c)^n (1+nc)),
/// d = sqrt((1-c)(1+nc)/(1+(n-1)c)).
inline double regular_abs_det(std::size_t n, double c) {
    const double nn = static_cast<double>(n);
    return std::sqrt(std::pow(1.0 - c, nn) * (1.0 + nn * c));
}

inline double regular_distance(std::size_t n, double c) {
    const double nn = static_cast<double>(n);
    return std::sqrt((1.0 - c) * (1.0 + nn * c) / (1.0 + (nn - 1.0) * c));
}

/// The c in [0, 1) at which the regular simplex has |D| = target (bisection;
/// |D| is strictly decreasing in c there).
inline double regular_c_for_det(std::size_t n, double target) {
    if (!(target > 0.0 && target <= 1.0)) throw ParameterError("regular_c_for_det: target must lie in (0, 1]");
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (regular_abs_det(n, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct InequalityCheck {
    double lower_margin = 0.0;  // |D| - d_min^n
    double upper_margin = 0.0;  // d_min - |D|
    std::size_t near_equality_count = 0;
};

inline InequalityCheck check_inequalities(const Simplex& sx, const Tolerances& tol = default_tolerances) {
    InequalityCheck r;
    const double ad = sx.abs_det();
    r.lower_margin = ad - std::pow(sx.d_min(), static_cast<double>(sx.n()));
    r.upper_margin = sx.d_min() - ad;
    for (double d : sx.distances())
        if (d <= sx.d_min() + tol.tie_band) ++r.near_equality_count;
    return r;
}

}  // namespace projsimplex

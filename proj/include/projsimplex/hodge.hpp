#pragma once

// The isometry L from the (m-1)-th exterior power of C^m onto C^m, and the
// identities built on it: generalized cross product, box product,
// the vector-valued Lagrange expansion, and the multicross relation.

#include <span>
#include <vector>

#include "config.hpp"
#include "core.hpp"
#include "exterior.hpp"

namespace projsimplex {

/// L: basis blade omitting index j maps to (-1)^j e_j.
inline CVector l_map(const Blade& x) {
    const std::size_t m = x.ambient_dim();
    if (x.grade() + 1 != m) throw GradeError("l_map: blade grade must be ambient dimension - 1");
    // In lexicographic order the subset omitting j sits at rank m-1-j.
    std::vector<Cplx> r(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Cplx c = x[m - 1 - j];
        r[j] = (j % 2 == 0) ? c : -c;
    }
    return CVector(std::move(r));
}

namespace detail {

inline void require_family(std::span<const CVector> vs, std::size_t count, std::size_t dim, const char* what) {
    if (vs.size() != count) throw ContractError(std::string(what) + ": wrong number of vectors");
    for (const CVector& v : vs)
        if (v.dim() != dim) throw ContractError(std::string(what) + ": dimension mismatch");
}

inline std::vector<CVector> without(std::span<const CVector> vs, std::size_t skip) {
    std::vector<CVector> r;
    r.reserve(vs.size() - 1);
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (i != skip) r.push_back(vs[i]);
    return r;
}

inline std::vector<CVector> prepend(const CVector& a, std::span<const CVector> vs) {
    std::vector<CVector> r;
    r.reserve(vs.size() + 1);
    r.push_back(a);
    r.insert(r.end(), vs.begin(), vs.end());
    return r;
}

}  // namespace detail

/// L(b_1 ^ ... ^ b_n) for n vectors in C^{n+1}; orthogonal (bilinear) to each b_j.
inline CVector generalized_cross(std::span<const CVector> bs) {
    if (bs.empty()) throw ContractError("generalized_cross: need n >= 1 vectors");
    detail::require_family(bs, bs[0].dim() - 1, bs[0].dim(), "generalized_cross");
    return l_map(wedge(bs));
}

/// a . L(b_1 ^ ... ^ b_n), equal to det(a, b_1, ..., b_n).
inline Cplx box_det(const CVector& a, std::span<const CVector> bs) {
    detail::require_family(bs, a.dim() - 1, a.dim(), "box_det");
    if (bs.empty()) return a[0];
    return dot(a, generalized_cross(bs));
}

/// (-1)^n times the vector-valued determinant whose first row holds
/// w_1..w_n and whose row i+1 holds v_i . w_1, ..., v_i . w_n.
/// Equals L(v_1 ^ ... ^ v_{n-1} ^ L(w_1 ^ ... ^ w_n)).
inline CVector lagrange_vector(std::span<const CVector> vs, std::span<const CVector> ws,
                               double tol_indep = default_tolerances.independence) {
    if (ws.empty()) throw ContractError("lagrange_vector: need n >= 1 w-vectors");
    const std::size_t n = ws.size();
    const std::size_t m = n + 1;
    detail::require_family(ws, n, m, "lagrange_vector");
    detail::require_family(vs, n - 1, m, "lagrange_vector");
    if (blade_herm_norm(wedge(ws)) <= tol_indep)
        throw DegenerateInputError("lagrange_vector: w-family is linearly dependent");
    if (!vs.empty() && blade_herm_norm(wedge(vs)) <= tol_indep)
        throw DegenerateInputError("lagrange_vector: v-family is linearly dependent");

    // Pairings P(i, j) = v_i . w_j, (n-1) x n.
    std::vector<Cplx> p((n - 1) * n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p[i * n + j] = dot(vs[i], ws[j]);

    // Expand along the vector row: sum_j (-1)^j w_j det(P without column j).
    std::vector<Cplx> acc(m);
    std::vector<Cplx> minor((n - 1) * (n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        Cplx cof = 1.0;
        if (n > 1) {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::size_t w = 0;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) minor[i * (n - 1) + w++] = p[i * n + c];
            }
            cof = detail::det_eliminate(minor, n - 1);
        }
        if (j % 2 == 1) cof = -cof;
        for (std::size_t t = 0; t < m; ++t) acc[t] += cof * ws[j][t];
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (Cplx& z : acc) z *= sign;
    return CVector(std::move(acc));
}

struct MulticrossResult {
    CVector result;  // L(v_1 ^ ... ^ v_n) = +/- D^{n-1} a
    Cplx det;        // D = det(a, u_1, ..., u_n)
};

/// With v_j = L(a ^ u_1 ^ .. (u_j omitted) .. ^ u_n), returns L(v_1 ^ ... ^ v_n)
/// and D. The sign relating result to D^{n-1} a is not resolved here.
inline MulticrossResult multicross(const CVector& a, std::span<const CVector> us,
                                   double tol_indep = default_tolerances.independence) {
    const std::size_t m = a.dim();
    detail::require_family(us, m - 1, m, "multicross");
    if (us.empty()) throw ContractError("multicross: need n >= 1");
    const auto rows = detail::prepend(a, us);
    const Cplx d = determinant_of_rows(rows);
    if (std::abs(d) <= tol_indep) throw DegenerateInputError("multicross: {a} u us is linearly dependent");

    std::vector<CVector> vs;
    vs.reserve(us.size());
    for (std::size_t j = 0; j < us.size(); ++j) vs.push_back(l_map(wedge(detail::prepend(a, detail::without(us, j)))));
    return {l_map(wedge(vs)), d};
}

}  // namespace projsimplex

#pragma once

// Exterior powers of C^m with the basis e_{i1}^...^e_{ik} (i1 < ... < ik)
// declared orthonormal. Blades are stored densely, one coefficient per
// k-subset, subsets in lexicographic order.

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "config.hpp"
#include "core.hpp"

namespace projsimplex {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Position of the strictly increasing subset `s` of {0..m-1} in the
/// lexicographic list of all |s|-subsets.
inline std::size_t subset_rank(std::span<const std::size_t> s, std::size_t m) {
    const std::size_t k = s.size();
    std::size_t r = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (s[i] >= m || s[i] < next) throw ContractError("subset_rank: not an increasing subset of range");
        for (std::size_t j = next; j < s[i]; ++j) r += binomial(m - 1 - j, k - 1 - i);
        next = s[i] + 1;
    }
    return r;
}

/// Inverse of subset_rank.
inline std::vector<std::size_t> subset_unrank(std::size_t rank, std::size_t m, std::size_t k) {
    if (rank >= binomial(m, k)) throw ContractError("subset_unrank: rank out of range");
    std::vector<std::size_t> s(k);
    std::size_t j = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (;; ++j) {
            const std::size_t block = binomial(m - 1 - j, k - 1 - i);
            if (rank < block) break;
            rank -= block;
        }
        s[i] = j++;
    }
    return s;
}

/// Advance `s` to the lexicographically next k-subset of {0..m-1}.
/// Returns false after the last one.
inline bool next_subset(std::vector<std::size_t>& s, std::size_t m) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < m - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Element of the k-th exterior power of C^m.
class Blade {
public:
    Blade(std::size_t ambient_dim, std::size_t grade, std::vector<Cplx> coeffs)
        : m_(ambient_dim), k_(grade), c_(std::move(coeffs)) {
        if (m_ == 0) throw ContractError("blade ambient dimension must be positive");
        if (k_ > m_) throw GradeError("blade grade exceeds ambient dimension");
        if (c_.size() != binomial(m_, k_)) throw ContractError("blade coefficient count is not C(m,k)");
        for (Cplx z : c_)
            if (!is_finite(z)) throw ContractError("blade coefficient is not finite");
    }

    static Blade zero(std::size_t ambient_dim, std::size_t grade) {
        return Blade(ambient_dim, grade, std::vector<Cplx>(binomial(ambient_dim, grade)));
    }

    /// e_{s[0]} ^ ... ^ e_{s[k-1]} for an increasing subset s.
    static Blade basis(std::size_t ambient_dim, std::span<const std::size_t> subset) {
        Blade b = zero(ambient_dim, subset.size());
        b.c_[subset_rank(subset, ambient_dim)] = 1.0;
        return b;
    }

    std::size_t ambient_dim() const { return m_; }
    std::size_t grade() const { return k_; }
    std::span<const Cplx> coeffs() const { return c_; }
    const Cplx& operator[](std::size_t rank) const { return c_[rank]; }
    Cplx at(std::span<const std::size_t> subset) const { return c_[subset_rank(subset, m_)]; }

private:
    std::size_t m_;
    std::size_t k_;
    std::vector<Cplx> c_;
};

inline constexpr std::size_t kWedgeCofactorMaxGrade = 4;

/// v_1 ^ ... ^ v_k. The coefficient on subset S is the k x k minor of the
/// rows vs restricted to the columns in S.
inline Blade wedge(std::span<const CVector> vs) {
    const std::size_t k = vs.size();
    if (k == 0) throw GradeError("wedge: need at least one vector");
    const std::size_t m = vs[0].dim();
    for (const CVector& v : vs)
        if (v.dim() != m) throw ContractError("wedge: vectors have mixed dimensions");
    if (k > m) throw GradeError("wedge: more vectors than the ambient dimension");

    std::vector<Cplx> coeffs;
    coeffs.reserve(binomial(m, k));
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), std::size_t{0});
    std::vector<Cplx> minor(k * k);
    do {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) minor[r * k + c] = vs[r][s[c]];
        coeffs.push_back(k <= kWedgeCofactorMaxGrade ? detail::det_cofactor_raw(minor, k)
                                                     : detail::det_eliminate(minor, k));
    } while (next_subset(s, m));
    return Blade(m, k, std::move(coeffs));
}

inline Blade wedge(std::initializer_list<CVector> vs) { return wedge(std::span<const CVector>(vs.begin(), vs.size())); }

/// Bilinear pairing on the exterior power: sum_S x_S y_S.
inline Cplx blade_dot(const Blade& x, const Blade& y) {
    if (x.ambient_dim() != y.ambient_dim() || x.grade() != y.grade())
        throw ContractError("blade_dot: grade or dimension mismatch");
    Cplx s = 0.0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) s += x[i] * y[i];
    return s;
}

inline double blade_herm_norm(const Blade& x) {
    double s = 0.0;
    for (Cplx z : x.coeffs()) s += std::norm(z);
    return std::sqrt(s);
}

/// det(vs[i] . ws[j]), with ws[j] conjugated first when `conjugate_second`.
inline Cplx gram_det(std::span<const CVector> vs, std::span<const CVector> ws, bool conjugate_second) {
    const std::size_t k = vs.size();
    if (k == 0 || ws.size() != k) throw ContractError("gram_det: need equal, non-zero counts");
    const std::size_t m = vs[0].dim();
    for (std::size_t i = 0; i < k; ++i)
        if (vs[i].dim() != m || ws[i].dim() != m) throw ContractError("gram_det: dimension mismatch");
    std::vector<Cplx> g(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Cplx s = 0.0;
            for (std::size_t t = 0; t < m; ++t) s += vs[i][t] * (conjugate_second ? std::conj(ws[j][t]) : ws[j][t]);
            g[i * k + j] = s;
        }
    return k == 1 ? g[0] : detail::det_eliminate(g, k);
}

struct HadamardReport {
    double lhs = 0.0;  // |v_1 ^ ... ^ v_k|
    double rhs = 0.0;  // prod |v_i|
    bool equality = false;
};

/// Compares |v_1^...^v_k| against prod |v_i|. `equality` reports whether the
/// exact equality condition holds: some vector is zero, or every Hermitian
/// cross pairing v_i . conj(v_j) (i != j) vanishes within `tol_orth`.
inline HadamardReport hadamard_report(std::span<const CVector> vs,
                                      double tol_orth = default_tolerances.orthogonality) {
    HadamardReport r;
    r.lhs = blade_herm_norm(wedge(vs));
    r.rhs = 1.0;
    bool any_zero = false;
    for (const CVector& v : vs) {
        const double nv = herm_norm(v);
        r.rhs *= nv;
        any_zero = any_zero || nv <= tol_orth;
    }
    bool orthogonal = true;
    for (std::size_t i = 0; i < vs.size() && orthogonal; ++i)
        for (std::size_t j = i + 1; j < vs.size() && orthogonal; ++j)
            orthogonal = std::abs(dot(vs[i], vs[j].conj())) <= tol_orth;
    r.equality = any_zero || orthogonal;
    return r;
}

}  // namespace projsimplex

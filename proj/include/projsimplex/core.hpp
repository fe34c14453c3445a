#pragma once

// Complex scalars, dense vectors and square matrices over C, the bilinear
// dot product, the Hermitian norm, and two independent determinant routes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace projsimplex {

using Cplx = std::complex<double>;

inline bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Dense vector in C^m, immutable once built. Construction rejects
/// non-finite entries and empty vectors.
class CVector {
public:
    explicit CVector(std::size_t dim) : c_(dim) { check(); }
    CVector(std::initializer_list<Cplx> xs) : c_(xs) { check(); }
    explicit CVector(std::vector<Cplx> xs) : c_(std::move(xs)) { check(); }

    static CVector basis(std::size_t dim, std::size_t i) {
        std::vector<Cplx> c(dim);
        if (i >= dim) throw ContractError("basis index out of range");
        c[i] = 1.0;
        return CVector(std::move(c));
    }

    std::size_t dim() const { return c_.size(); }
    const Cplx& operator[](std::size_t i) const { return c_[i]; }
    std::span<const Cplx> coeffs() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    CVector conj() const {
        std::vector<Cplx> r(c_.size());
        std::transform(c_.begin(), c_.end(), r.begin(), [](Cplx z) { return std::conj(z); });
        return CVector(std::move(r));
    }

    friend CVector operator+(const CVector& a, const CVector& b) {
        same_dim(a, b);
        std::vector<Cplx> r(a.dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return CVector(std::move(r));
    }
    friend CVector operator-(const CVector& a, const CVector& b) {
        same_dim(a, b);
        std::vector<Cplx> r(a.dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return CVector(std::move(r));
    }
    friend CVector operator*(Cplx s, const CVector& a) {
        std::vector<Cplx> r(a.dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a[i];
        return CVector(std::move(r));
    }
    friend bool operator==(const CVector&, const CVector&) = default;

private:
    static void same_dim(const CVector& a, const CVector& b) {
        if (a.dim() != b.dim()) throw ContractError("vector dimension mismatch");
    }
    void check() const {
        if (c_.empty()) throw ContractError("vector dimension must be positive");
        for (Cplx z : c_)
            if (!is_finite(z)) throw ContractError("vector entry is not finite");
    }

    std::vector<Cplx> c_;
};

/// Bilinear dot product sum_i a_i b_i. No conjugation.
inline Cplx dot(const CVector& a, const CVector& b) {
    if (a.dim() != b.dim()) throw ContractError("dot: dimension mismatch");
    Cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double herm_norm(const CVector& a) {
    double s = 0.0;
    for (Cplx z : a) s += std::norm(z);
    return std::sqrt(s);
}

/// Square complex matrix, row-major, immutable.
class CMatrix {
public:
    explicit CMatrix(std::size_t size) : n_(size), a_(size * size) {
        if (size == 0) throw ContractError("matrix size must be positive");
    }

    CMatrix(std::size_t size, std::vector<Cplx> row_major) : n_(size), a_(std::move(row_major)) {
        if (size == 0) throw ContractError("matrix size must be positive");
        if (a_.size() != size * size) throw ContractError("matrix data is not square");
        for (Cplx z : a_)
            if (!is_finite(z)) throw ContractError("matrix entry is not finite");
    }

    /// Matrix whose rows are the given vectors; requires rows.size() == dim.
    static CMatrix from_rows(std::span<const CVector> rows) {
        const std::size_t n = rows.size();
        std::vector<Cplx> a;
        a.reserve(n * n);
        for (const CVector& r : rows) {
            if (r.dim() != n) throw ContractError("from_rows: rows must form a square matrix");
            a.insert(a.end(), r.begin(), r.end());
        }
        return CMatrix(n, std::move(a));
    }

    static CMatrix identity(std::size_t size) {
        CMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m.a_[i * size + i] = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }
    Cplx operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    std::span<const Cplx> data() const { return a_; }

    CVector row(std::size_t r) const {
        return CVector(std::vector<Cplx>(a_.begin() + r * n_, a_.begin() + (r + 1) * n_));
    }

private:
    std::size_t n_;
    std::vector<Cplx> a_;
};

namespace detail {

// Elimination with partial pivoting on modulus. Destroys `a` (row-major n x n).
inline Cplx det_eliminate(std::span<Cplx> a, std::size_t n) {
    Cplx det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(a[r * n + k]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
            det = -det;
        }
        const Cplx p = a[k * n + k];
        det *= p;
        for (std::size_t r = k + 1; r < n; ++r) {
            const Cplx f = a[r * n + k] / p;
            if (f == Cplx{}) continue;
            for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
        }
    }
    return det;
}

// Cofactor expansion along the first row of the matrix selected by `rows`
// and `cols` out of the row-major n x n buffer `a`.
inline Cplx det_cofactor_sub(std::span<const Cplx> a, std::size_t n, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) {
    const std::size_t k = rows.size();
    if (k == 1) return a[rows[0] * n + cols[0]];
    if (k == 2) {
        return a[rows[0] * n + cols[0]] * a[rows[1] * n + cols[1]] -
               a[rows[0] * n + cols[1]] * a[rows[1] * n + cols[0]];
    }
    std::vector<std::size_t> sub(k - 1);
    Cplx s = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const Cplx e = a[rows[0] * n + cols[j]];
        if (e == Cplx{}) continue;
        std::size_t w = 0;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub[w++] = cols[c];
        const Cplx minor = det_cofactor_sub(a, n, rows.subspan(1), sub);
        s += (j % 2 == 0 ? e : -e) * minor;
    }
    return s;
}

inline Cplx det_cofactor_raw(std::span<const Cplx> a, std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return det_cofactor_sub(a, n, idx, idx);
}

}  // namespace detail

inline constexpr std::size_t kCofactorMaxSize = 6;

/// Determinant by row elimination with partial pivoting on modulus.
/// Singular input is not an error; it yields a value of modulus ~0.
inline Cplx determinant(const CMatrix& m) {
    if (m.size() == 1) return m(0, 0);
    std::vector<Cplx> work(m.data().begin(), m.data().end());
    return detail::det_eliminate(work, m.size());
}

/// Determinant by recursive cofactor expansion along the first row. Kept as
/// an independent oracle for `determinant`; refuses sizes above 6.
inline Cplx determinant_cofactor(const CMatrix& m) {
    if (m.size() > kCofactorMaxSize)
        throw OracleSizeError("determinant_cofactor: size " + std::to_string(m.size()) + " exceeds " +
                              std::to_string(kCofactorMaxSize));
    return detail::det_cofactor_raw(m.data(), m.size());
}

inline Cplx determinant_of_rows(std::span<const CVector> rows) { return determinant(CMatrix::from_rows(rows)); }

}  // namespace projsimplex

#pragma once

// Seeded random streams and the complex Gaussian sampling used for random
// points, unitaries and simplices. Normal deviates come from our own
// Box-Muller on raw 64-bit draws so streams are identical across standard
// library implementations.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "core.hpp"

namespace projsimplex {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the index-th independent stream under a master seed.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_stream(std::uint64_t master, std::uint64_t index) { return Rng(stream_seed(master, index)); }

/// Uniform in (0, 1).
inline double uniform01(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double std_normal(Rng& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Standard complex Gaussian: E|z|^2 = 1.
inline Cplx complex_normal(Rng& rng) {
    const double re = std_normal(rng);
    const double im = std_normal(rng);
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

inline CVector gaussian_vector(std::size_t m, Rng& rng) {
    std::vector<Cplx> c(m);
    for (Cplx& z : c) z = complex_normal(rng);
    return CVector(std::move(c));
}

/// Unit vector uniformly distributed on the sphere in C^m.
inline CVector random_unit_vector(std::size_t m, Rng& rng) {
    for (;;) {
        const CVector g = gaussian_vector(m, rng);
        const double n = herm_norm(g);
        if (n > 1e-300) return Cplx(1.0 / n) * g;
    }
}

/// Hermitian Gram-Schmidt of the rows; rows must be independent.
inline std::vector<CVector> orthonormalize(std::span<const CVector> rows) {
    std::vector<CVector> q;
    q.reserve(rows.size());
    for (const CVector& r : rows) {
        std::vector<Cplx> v(r.begin(), r.end());
        // Two passes for numerical orthogonality.
        for (int pass = 0; pass < 2; ++pass)
            for (const CVector& e : q) {
                Cplx proj = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) proj += std::conj(e[i]) * v[i];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * e[i];
            }
        double n = 0.0;
        for (Cplx z : v) n += std::norm(z);
        n = std::sqrt(n);
        if (n == 0.0) throw DegenerateInputError("orthonormalize: rows are dependent");
        for (Cplx& z : v) z /= n;
        q.emplace_back(std::move(v));
    }
    return q;
}

/// Unitary matrix (Hermitian sense) drawn from Gram-Schmidt of a Gaussian matrix.
inline CMatrix random_unitary(std::size_t m, Rng& rng) {
    std::vector<CVector> g;
    for (std::size_t i = 0; i < m; ++i) g.push_back(gaussian_vector(m, rng));
    return CMatrix::from_rows(orthonormalize(g));
}

inline CVector apply(const CMatrix& a, const CVector& v) {
    if (a.size() != v.dim()) throw ContractError("apply: dimension mismatch");
    std::vector<Cplx> r(v.dim());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[i] += a(i, j) * v[j];
    return CVector(std::move(r));
}

}  // namespace projsimplex

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "projsimplex/exterior.hpp"
#include "projsimplex/random.hpp"

using namespace projsimplex;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<CVector> family(std::size_t k, std::size_t m, Rng& rng) {
    std::vector<CVector> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(gaussian_vector(m, rng));
    return v;
}

// Gram determinant by the permutation sum, independent of the library.
Cplx gram_oracle(const std::vector<CVector>& vs, const std::vector<CVector>& ws, bool conj) {
    oracle::Mat g(vs.size(), oracle::Vec(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            Cplx s = 0.0;
            for (std::size_t t = 0; t < vs[i].dim(); ++t) s += vs[i][t] * (conj ? std::conj(ws[j][t]) : ws[j][t]);
            g[i][j] = s;
        }
    return oracle::leibniz_det(g);
}

}  // namespace

TEST(Subsets, RankUnrankRoundTrip) {
    for (std::size_t m = 1; m <= 9; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            std::vector<std::size_t> s(k);
            std::iota(s.begin(), s.end(), std::size_t{0});
            std::size_t expected = 0;
            do {
                EXPECT_EQ(subset_rank(s, m), expected);
                EXPECT_EQ(subset_unrank(expected, m, k), s);
                ++expected;
            } while (k > 0 && next_subset(s, m));
            EXPECT_EQ(expected, binomial(m, k));
        }
}

TEST(Subsets, LexicographicOrderInC3) {
    EXPECT_EQ(subset_unrank(0, 3, 2), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(subset_unrank(1, 3, 2), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(subset_unrank(2, 3, 2), (std::vector<std::size_t>{1, 2}));
}

TEST(Blade, ValidatesShape) {
    EXPECT_THROW(Blade(3, 4, {}), GradeError);
    EXPECT_THROW(Blade(3, 2, {1.0, 2.0}), ContractError);
    EXPECT_THROW(Blade(2, 1, {1.0, std::nan("")}), ContractError);
    EXPECT_NO_THROW(Blade(3, 0, {1.0}));
}

TEST(Wedge, BasisBlade) {
    const Blade b = wedge({CVector::basis(3, 0), CVector::basis(3, 1)});
    const std::vector<std::size_t> s01{0, 1}, s02{0, 2}, s12{1, 2};
    EXPECT_EQ(b.at(s01), Cplx(1.0));
    EXPECT_EQ(b.at(s02), Cplx(0.0));
    EXPECT_EQ(b.at(s12), Cplx(0.0));
}

TEST(Wedge, RepeatedVectorGivesZeroBlade) {
    Rng rng(1);
    const CVector v = gaussian_vector(4, rng);
    EXPECT_EQ(blade_herm_norm(wedge({v, v})), 0.0);
}

TEST(Wedge, HandComputedMinors) {
    const Blade b = wedge({CVector{1.0, 0.0, 0.0}, CVector{kInvSqrt2, kInvSqrt2, 0.0}});
    EXPECT_NEAR(std::abs(b[0] - kInvSqrt2), 0.0, 1e-15);  // {0,1}
    EXPECT_EQ(b[1], Cplx(0.0));                            // {0,2}
    EXPECT_EQ(b[2], Cplx(0.0));                            // {1,2}
}

TEST(Wedge, GradeAndDimensionErrors) {
    EXPECT_THROW(wedge(std::span<const CVector>{}), GradeError);
    EXPECT_THROW(wedge({CVector{1.0, 0.0}, CVector{0.0, 1.0}, CVector{1.0, 1.0}}), GradeError);
    EXPECT_THROW(wedge({CVector{1.0, 0.0}, CVector{0.0, 1.0, 0.0}}), ContractError);
}

TEST(Wedge, CofactorAndEliminationPathsAgree) {
    // Grades 4 and 5 straddle the switch between the two minor evaluators;
    // compare both against the permutation-sum oracle.
    Rng rng(2);
    for (std::size_t k : {3u, 4u, 5u, 6u}) {
        const auto vs = family(k, k + 1, rng);
        const Blade b = wedge(vs);
        for (std::size_t r = 0; r < b.coeffs().size(); ++r) {
            const auto s = subset_unrank(r, k + 1, k);
            oracle::Mat minor(k, oracle::Vec(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < k; ++c) minor[i][c] = vs[i][s[c]];
            const Cplx ref = oracle::leibniz_det(minor);
            EXPECT_LE(std::abs(b[r] - ref), 1e-11 * (1.0 + std::abs(ref)));
        }
    }
}

TEST(BladeDot, Examples) {
    const std::vector<std::size_t> s01{0, 1}, s12{1, 2};
    EXPECT_EQ(blade_dot(Blade::basis(3, s01), Blade::basis(3, s01)), Cplx(1.0));
    EXPECT_EQ(blade_dot(Blade::basis(3, s01), Blade::basis(3, s12)), Cplx(0.0));
    EXPECT_THROW(blade_dot(Blade::basis(3, s01), Blade::zero(4, 2)), ContractError);
    EXPECT_THROW(blade_dot(Blade::basis(3, s01), Blade::zero(3, 1)), ContractError);
}

TEST(BladeDot, TwoByTwoGramianOnRandomInputs) {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto v = family(2, 4, rng), w = family(2, 4, rng);
        const Cplx lhs = blade_dot(wedge(v), wedge(w));
        const Cplx rhs = dot(v[0], w[0]) * dot(v[1], w[1]) - dot(v[0], w[1]) * dot(v[1], w[0]);
        EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST(BladeHermNorm, Examples) {
    const std::vector<std::size_t> s1{1};
    EXPECT_EQ(blade_herm_norm(Blade::zero(3, 2)), 0.0);
    EXPECT_EQ(blade_herm_norm(Blade::basis(3, s1)), 1.0);
    EXPECT_NEAR(blade_herm_norm(wedge({CVector{1.0, 0.0, 0.0}, CVector{kInvSqrt2, kInvSqrt2, 0.0}})), kInvSqrt2,
                1e-15);
}

TEST(GramDet, Examples) {
    const std::vector<CVector> unit{CVector{0.6, Cplx(0.0, 0.8)}};
    EXPECT_NEAR(std::abs(gram_det(unit, unit, true) - 1.0), 0.0, 1e-15);
    const std::vector<CVector> e01{CVector::basis(3, 0), CVector::basis(3, 1)};
    EXPECT_EQ(gram_det(e01, e01, false), Cplx(1.0));
    const std::vector<CVector> vs{CVector{1.0, 0.0, 0.0}, CVector{kInvSqrt2, kInvSqrt2, 0.0}};
    EXPECT_NEAR(std::abs(gram_det(vs, vs, true) - 0.5), 0.0, 1e-15);
    EXPECT_THROW(gram_det(vs, unit, true), ContractError);
}

TEST(Hadamard, Examples) {
    const std::vector<CVector> ortho{CVector::basis(3, 0), CVector::basis(3, 2)};
    const HadamardReport a = hadamard_report(ortho);
    EXPECT_DOUBLE_EQ(a.lhs, 1.0);
    EXPECT_DOUBLE_EQ(a.rhs, 1.0);
    EXPECT_TRUE(a.equality);

    const CVector v{0.6, Cplx(0.0, 0.8), 0.0};
    const std::vector<CVector> twice{v, v};
    const HadamardReport b = hadamard_report(twice);
    EXPECT_EQ(b.lhs, 0.0);
    EXPECT_NEAR(b.rhs, 1.0, 1e-15);
    EXPECT_FALSE(b.equality);

    const std::vector<CVector> tilted{CVector{1.0, 0.0, 0.0}, CVector{kInvSqrt2, kInvSqrt2, 0.0}};
    const HadamardReport c = hadamard_report(tilted);
    EXPECT_NEAR(c.lhs, kInvSqrt2, 1e-15);
    EXPECT_NEAR(c.rhs, 1.0, 1e-15);
    EXPECT_FALSE(c.equality);
}

TEST(Hadamard, ZeroVectorGivesEquality) {
    const std::vector<CVector> vs{CVector{1.0, 2.0, 0.0}, CVector(3)};
    const HadamardReport r = hadamard_report(vs);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.rhs, 0.0);
    EXPECT_TRUE(r.equality);
}

TEST(ExteriorProperty, GramianIdentity) {
    Rng rng(21);
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t k = 1; k <= m; ++k)
            for (int t = 0; t < 10; ++t) {
                const auto vs = family(k, m, rng), ws = family(k, m, rng);
                const Cplx lhs = blade_dot(wedge(vs), wedge(ws));
                const Cplx ref = gram_oracle(vs, ws, false);
                EXPECT_LE(std::abs(lhs - ref), 1e-10 * std::max(1.0, std::abs(ref)));
                EXPECT_LE(std::abs(gram_det(vs, ws, false) - ref), 1e-10 * std::max(1.0, std::abs(ref)));
            }
}

TEST(ExteriorProperty, NormIdentity) {
    Rng rng(22);
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t k = 1; k <= m; ++k)
            for (int t = 0; t < 10; ++t) {
                const auto vs = family(k, m, rng);
                const double w = blade_herm_norm(wedge(vs));
                const Cplx g = gram_det(vs, vs, true);
                EXPECT_LE(std::abs(w * w - g.real()), 1e-10 * std::max(1.0, w * w));
                EXPECT_LE(std::abs(g.imag()), 1e-10 * std::max(1.0, w * w));
            }
}

TEST(ExteriorProperty, SwappingInputsNegatesEveryCoefficient) {
    Rng rng(23);
    for (std::size_t m = 2; m <= 7; ++m) {
        auto vs = family(m - 1 > 1 ? m - 1 : 2, m, rng);
        const Blade a = wedge(vs);
        std::swap(vs[0], vs[1]);
        const Blade b = wedge(vs);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            EXPECT_LE(std::abs(a[i] + b[i]), 1e-12 * std::max(1.0, std::abs(a[i])));
    }
}

TEST(ExteriorProperty, HadamardBoundAndScaling) {
    Rng rng(24);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + t % 6;
        const std::size_t k = 1 + rng() % m;
        auto vs = family(k, m, rng);
        const HadamardReport r = hadamard_report(vs);
        EXPECT_LE(r.lhs, r.rhs * (1.0 + 1e-12));
        const Cplx alpha = complex_normal(rng);
        const std::size_t i = rng() % k;
        vs[i] = alpha * vs[i];
        const HadamardReport s = hadamard_report(vs);
        EXPECT_LE(std::abs(s.lhs - std::abs(alpha) * r.lhs), 1e-12 * std::max(1e-300, std::abs(alpha) * r.rhs));
        EXPECT_LE(std::abs(s.rhs - std::abs(alpha) * r.rhs), 1e-12 * std::abs(alpha) * r.rhs);
    }
}

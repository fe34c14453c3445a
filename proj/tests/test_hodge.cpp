#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projsimplex/hodge.hpp"
#include "projsimplex/random.hpp"

using namespace projsimplex;

namespace {

std::vector<CVector> family(std::size_t k, std::size_t m, Rng& rng) {
    std::vector<CVector> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(random_unit_vector(m, rng));
    return v;
}

oracle::Vec raw(const CVector& v) { return {v.begin(), v.end()}; }

double max_diff(const CVector& a, const oracle::Vec& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

double max_diff(const CVector& a, const CVector& b) { return max_diff(a, raw(b)); }

Blade basis_omitting(std::size_t m, std::size_t j) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
        if (i != j) s.push_back(i);
    return Blade::basis(m, s);
}

}  // namespace

TEST(LMap, BasisImages) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::size_t m = n + 1;
        // e_1 ^ ... ^ e_n -> e_0
        EXPECT_EQ(l_map(basis_omitting(m, 0)), CVector::basis(m, 0));
        // e_0 ^ ... ^ e_{n-1} -> (-1)^n e_n
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        EXPECT_EQ(l_map(basis_omitting(m, n)), Cplx(sign) * CVector::basis(m, n));
        for (std::size_t j = 0; j < m; ++j)
            EXPECT_EQ(l_map(basis_omitting(m, j)), Cplx(j % 2 == 0 ? 1.0 : -1.0) * CVector::basis(m, j));
    }
}

TEST(LMap, IsClassicalCrossProductInC3) {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const CVector a = gaussian_vector(3, rng), b = gaussian_vector(3, rng);
        EXPECT_LE(max_diff(l_map(wedge({a, b})), oracle::cross3(raw(a), raw(b))), 1e-13);
    }
}

TEST(LMap, WrongGradeIsError) { EXPECT_THROW(l_map(Blade::zero(4, 2)), GradeError); }

TEST(LMap, Isometry) {
    Rng rng(32);
    for (std::size_t m = 2; m <= 7; ++m)
        for (int t = 0; t < 50; ++t) {
            std::vector<Cplx> c(m);
            for (Cplx& z : c) z = complex_normal(rng);
            const Blade x(m, m - 1, c);
            EXPECT_LE(std::abs(herm_norm(l_map(x)) - blade_herm_norm(x)), 1e-12 * blade_herm_norm(x));
        }
}

TEST(GeneralizedCross, Examples) {
    const std::vector<CVector> e12{CVector::basis(3, 1), CVector::basis(3, 2)};
    EXPECT_EQ(generalized_cross(e12), CVector::basis(3, 0));

    Rng rng(33);
    const CVector a = gaussian_vector(4, rng), b = gaussian_vector(4, rng);
    const std::vector<CVector> dependent{a, b, Cplx(2.0, -1.0) * a + b};
    EXPECT_LE(herm_norm(generalized_cross(dependent)), 1e-13);

    for (int t = 0; t < 50; ++t) {
        const auto bs = family(3, 4, rng);
        const CVector x = generalized_cross(bs);
        for (const CVector& b : bs) EXPECT_LE(std::abs(dot(x, b)), 1e-10);
    }
}

TEST(GeneralizedCross, WrongCountIsError) {
    const std::vector<CVector> one{CVector::basis(3, 1)};
    EXPECT_THROW(generalized_cross(one), ContractError);
}

TEST(BoxDet, Examples) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<CVector> bs;
        for (std::size_t j = 1; j <= n; ++j) bs.push_back(CVector::basis(n + 1, j));
        EXPECT_EQ(box_det(CVector::basis(n + 1, 0), bs), Cplx(1.0));
    }
    Rng rng(34);
    const auto bs = family(3, 4, rng);
    EXPECT_LE(std::abs(box_det(bs[0], bs)), 1e-10);
}

TEST(BoxDet, MatchesDeterminantAndLeibniz) {
    Rng rng(35);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 30; ++t) {
            const auto rows = family(n + 1, n + 1, rng);
            const std::vector<CVector> bs(rows.begin() + 1, rows.end());
            const Cplx box = box_det(rows[0], bs);
            const Cplx lu = determinant_of_rows(rows);
            EXPECT_LE(std::abs(box - lu), 1e-10 * std::max(1.0, std::abs(lu)));
            oracle::Mat m;
            for (const CVector& r : rows) m.push_back(raw(r));
            EXPECT_LE(std::abs(box - oracle::leibniz_det(m)), 1e-10);
        }
}

TEST(Lagrange, TripleProductInC3) {
    // v x (w1 x w2) = w1 (v.w2) - w2 (v.w1), via explicit cross products.
    Rng rng(36);
    for (int t = 0; t < 100; ++t) {
        const auto v = family(1, 3, rng);
        const auto w = family(2, 3, rng);
        const oracle::Vec ref = oracle::cross3(raw(v[0]), oracle::cross3(raw(w[0]), raw(w[1])));
        EXPECT_LE(max_diff(lagrange_vector(v, w), ref), 1e-13);
    }
}

TEST(Lagrange, StandardBasisWsWithVsInSpan) {
    Rng rng(37);
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::size_t m = n + 1;
        std::vector<CVector> ws;
        for (std::size_t j = 1; j <= n; ++j) ws.push_back(CVector::basis(m, j));
        std::vector<CVector> vs;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<Cplx> c(m);
            for (std::size_t j = 1; j < m; ++j) c[j] = complex_normal(rng);
            vs.push_back(CVector(c));
        }
        std::vector<CVector> chain(vs);
        chain.push_back(l_map(wedge(ws)));
        EXPECT_LE(max_diff(lagrange_vector(vs, ws), l_map(wedge(chain))), 1e-12) << "n=" << n;
    }
}

TEST(Lagrange, ScalarProjectionMatchesDeterminant) {
    Rng rng(38);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int t = 0; t < 40; ++t) {
            const auto vs = family(n - 1, n + 1, rng);
            const auto ws = family(n, n + 1, rng);
            const CVector z = random_unit_vector(n + 1, rng);
            oracle::Mat g(n, oracle::Vec(n));
            for (std::size_t j = 0; j < n; ++j) g[0][j] = dot(z, ws[j]);
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = 0; j < n; ++j) g[i + 1][j] = dot(vs[i], ws[j]);
            Cplx ref = oracle::leibniz_det(g);
            if (n % 2 == 1) ref = -ref;
            EXPECT_LE(std::abs(dot(z, lagrange_vector(vs, ws)) - ref), 1e-10);
        }
}

TEST(Lagrange, DegenerateFamiliesRejected) {
    Rng rng(39);
    auto ws = family(3, 4, rng);
    const auto vs = family(2, 4, rng);
    ws[2] = ws[0];
    EXPECT_THROW(lagrange_vector(vs, ws), DegenerateInputError);
    const auto ws_ok = family(3, 4, rng);
    const std::vector<CVector> vs_bad{vs[0], vs[0]};
    EXPECT_THROW(lagrange_vector(vs_bad, ws_ok), DegenerateInputError);
    EXPECT_THROW(lagrange_vector(family(1, 4, rng), ws_ok), ContractError);
}

TEST(Multicross, StandardBasis) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<CVector> us;
        for (std::size_t j = 1; j <= n; ++j) us.push_back(CVector::basis(n + 1, j));
        const MulticrossResult r = multicross(CVector::basis(n + 1, 0), us);
        EXPECT_DOUBLE_EQ(std::abs(r.det), 1.0);
        EXPECT_DOUBLE_EQ(std::abs(r.result[0]), 1.0);
        EXPECT_DOUBLE_EQ(herm_norm(r.result), 1.0);
    }
}

TEST(Multicross, NormAndCollinearity) {
    Rng rng(40);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int t = 0; t < 50; ++t) {
            const auto all = family(n + 1, n + 1, rng);
            const std::vector<CVector> us(all.begin() + 1, all.end());
            const MulticrossResult r = multicross(all[0], us);
            const double expect = std::pow(std::abs(r.det), static_cast<double>(n - 1));
            EXPECT_LE(std::abs(herm_norm(r.result) - expect), 1e-8 * expect);
            const double pair = std::abs(dot(r.result, all[0].conj()));
            EXPECT_LE(std::abs(pair - herm_norm(r.result)), 1e-8 * herm_norm(r.result));
        }
}

TEST(Multicross, DependentInputRejected) {
    const std::vector<CVector> us{CVector::basis(3, 0), CVector::basis(3, 1)};
    EXPECT_THROW(multicross(CVector{1.0, 1.0, 0.0}, us), DegenerateInputError);
}

#include <gtest/gtest.h>

#include <random>

#include "snfc/gf.hpp"

using namespace snfc;
using namespace snfc::gf;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus.
std::vector<Elem> poly_mulmod(const std::vector<Elem>& a, const std::vector<Elem>& b, const std::vector<Elem>& mod,
                              Elem p) {
    std::vector<Elem> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const std::size_t m = mod.size() - 1;
    for (std::size_t d = prod.size(); d-- > m;) {
        const Elem c = prod[d];
        if (!c) continue;
        for (std::size_t k = 0; k <= m; ++k) prod[d - m + k] = (prod[d - m + k] + p * p - c * mod[k] % p) % p;
    }
    prod.resize(m);
    return prod;
}

// A monic polynomial of degree 2 or 3 is irreducible iff it has no root.
bool has_root(const std::vector<Elem>& f, Elem p) {
    for (Elem x = 0; x < p; ++x) {
        Elem v = 0, xp = 1;
        for (Elem c : f) {
            v = (v + c * xp) % p;
            xp = xp * x % p;
        }
        if (v == 0) return true;
    }
    return false;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % f.q());
    return m;
}

}  // namespace

TEST(FieldMake, PrimeField) {
    const auto f = Field::make(2, 1);
    EXPECT_EQ(f.q(), 2u);
    EXPECT_EQ(f.add(1, 1), 0u);
}

TEST(FieldMake, Gf4ModulusIsSmallestIrreducible) {
    // Scan the monic quadratics over GF(2) in lexicographic order (c0 first).
    std::vector<Elem> first;
    for (Elem c0 = 0; c0 < 2 && first.empty(); ++c0)
        for (Elem c1 = 0; c1 < 2 && first.empty(); ++c1)
            if (!has_root({c0, c1, 1}, 2)) first = {c0, c1, 1};
    const auto f = Field::make(2, 2);
    EXPECT_EQ(f.q(), 4u);
    EXPECT_EQ(f.modulus(), first);
    EXPECT_EQ(f.modulus(), (std::vector<Elem>{1, 1, 1}));
}

TEST(FieldMake, Errors) {
    try {
        Field::make(4, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPrime);
    }
    try {
        Field::make(2, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeZero);
    }
    try {
        Field::make(2, 17);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
    }
}

TEST(FieldMake, CubicModuliAreIrreducible) {
    for (Elem p : {2u, 3u, 5u}) {
        const auto f = Field::make(p, 3);
        EXPECT_FALSE(has_root(f.modulus(), p)) << p;
        EXPECT_EQ(f.modulus().back(), 1u);
    }
}

TEST(FieldMake, ParseRoundTrip) {
    const auto f = Field::parse("3^2");
    EXPECT_EQ(f.q(), 9u);
    EXPECT_EQ(f.to_string(), "3^2");
    try {
        Field::parse("2^");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
    }
}

TEST(FieldArith, Gf4AlphaSquared) {
    const auto f = Field::make(2, 2);
    const Elem alpha = 2;
    EXPECT_EQ(f.coeffs(alpha), (std::vector<Elem>{0, 1}));
    EXPECT_EQ(f.mul(alpha, alpha), 3u);  // alpha + 1
    EXPECT_EQ(f.inv(alpha), 3u);
}

TEST(FieldArith, MulMatchesPolynomialOracle) {
    for (auto [p, m] : std::vector<std::pair<Elem, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        const auto f = Field::make(p, m);
        for (Elem a = 0; a < f.q(); ++a)
            for (Elem b = 0; b < f.q(); ++b) {
                const auto expect = poly_mulmod(f.coeffs(a), f.coeffs(b), f.modulus(), p);
                ASSERT_EQ(f.coeffs(f.mul(a, b)), expect) << f.to_string() << " " << a << "*" << b;
            }
    }
}

TEST(FieldArith, InverseByExhaustiveSearch) {
    for (auto [p, m] : std::vector<std::pair<Elem, unsigned>>{{2, 2}, {3, 2}, {2, 5}, {11, 1}}) {
        const auto f = Field::make(p, m);
        for (Elem a = 1; a < f.q(); ++a) {
            Elem found = 0;
            for (Elem b = 1; b < f.q(); ++b)
                if (f.mul(a, b) == 1) found = b;
            EXPECT_EQ(f.inv(a), found);
        }
    }
}

TEST(FieldArith, Errors) {
    const auto f = Field::make(2, 2);
    try {
        f.inv(0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivideByZero);
    }
    try {
        (void)(Fe(f, 1) + Fe(Field::make(3, 1), 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
}

TEST(FieldAxioms, SampledTriples) {
    std::mt19937_64 rng(7);
    for (auto [p, m] : std::vector<std::pair<Elem, unsigned>>{
             {2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 8}, {5, 3}, {13, 2}, {251, 1}}) {
        const auto f = Field::make(p, m);
        for (int t = 0; t < 2000; ++t) {
            const Elem a = rng() % f.q(), b = rng() % f.q(), c = rng() % f.q();
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_EQ(f.add(a, f.neg(a)), 0u);
            if (a) {
                ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
            }
        }
    }
}

TEST(MatRank, Basics) {
    const auto f = Field::make(2, 1);
    EXPECT_EQ(rank(Matrix(f, 0, 0)), 0u);
    EXPECT_EQ(rank(Matrix::identity(f, 3)), 3u);
    EXPECT_EQ(rank(Matrix::from_rows(f, {{1, 1}, {1, 1}})), 1u);
}

TEST(MatInverse, Examples) {
    const auto f4 = Field::make(2, 2);
    EXPECT_EQ(inverse(Matrix::identity(f4, 2)), Matrix::identity(f4, 2));
    const auto b = Matrix::from_rows(f4, {{1, 0}, {2, 1}});
    EXPECT_EQ(inverse(b), b);
    try {
        inverse(Matrix(f4, 2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Singular);
    }
}

TEST(MatInverse, RandomInvertible) {
    std::mt19937_64 rng(11);
    for (auto [p, m] : std::vector<std::pair<Elem, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 2}}) {
        const auto f = Field::make(p, m);
        int done = 0;
        while (done < 1000) {
            const std::size_t n = 1 + rng() % 5;
            const auto a = random_matrix(f, n, n, rng);
            if (rank(a) != n) continue;
            ASSERT_EQ(inverse(a) * a, Matrix::identity(f, n));
            ASSERT_EQ(a * inverse(a), Matrix::identity(f, n));
            ++done;
        }
    }
}

TEST(SolveRight, Examples) {
    const auto f = Field::make(3, 1);
    const auto y = Matrix::from_rows(f, {{1, 2}, {0, 1}});
    EXPECT_EQ(*solve_right(Matrix::identity(f, 2), y), y);
    const auto a = Matrix::from_rows(f, {{1, 1}, {1, 1}});
    EXPECT_FALSE(solve_right(a, Matrix::from_rows(f, {{1}, {2}})).has_value());
    try {
        solve_right(a, Matrix(f, 3, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(SolveRight, FreeVariablesZero) {
    const auto f = Field::make(2, 1);
    const auto a = Matrix::from_rows(f, {{1, 1, 0}});
    const auto x = *solve_right(a, Matrix::from_rows(f, {{1}}));
    EXPECT_EQ(x, Matrix::from_rows(f, {{1}, {0}, {0}}));
}

TEST(SolveRight, RandomConsistentSystems) {
    std::mt19937_64 rng(5);
    const auto f = Field::make(2, 3);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_matrix(f, 1 + rng() % 5, 1 + rng() % 5, rng);
        const auto x0 = random_matrix(f, a.cols(), 2, rng);
        const auto y = a * x0;
        const auto x = solve_right(a, y);
        ASSERT_TRUE(x.has_value());
        ASSERT_EQ(a * *x, y);
    }
}

TEST(IntersectsTrivially, Examples) {
    const auto f2 = Field::make(2, 1);
    EXPECT_TRUE(intersects_trivially(Matrix::column(f2, {1, 0}), Matrix::column(f2, {0, 1})));
    EXPECT_FALSE(intersects_trivially(Matrix::column(f2, {1, 1}), Matrix::column(f2, {1, 1})));
    const auto f4 = Field::make(2, 2);
    EXPECT_TRUE(intersects_trivially(Matrix::column(f4, {1, 2}), Matrix::column(f4, {1, 1})));
}

TEST(IntersectsTrivially, RankSubadditivity) {
    std::mt19937_64 rng(3);
    const auto f = Field::make(3, 1);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const auto u = random_matrix(f, n, rng() % 3, rng);
        const auto v = random_matrix(f, n, rng() % 3, rng);
        const auto joint = rank(hstack(u, v));
        ASSERT_LE(joint, rank(u) + rank(v));
        ASSERT_EQ(joint == rank(u) + rank(v), intersects_trivially(u, v));
    }
}

TEST(CompanionExpand, Blocks) {
    const auto f4 = Field::make(2, 2);
    const auto f2 = Field::make(2, 1);
    EXPECT_EQ(companion_expand(Matrix::from_rows(f4, {{0}})), Matrix(f2, 2, 2));
    EXPECT_EQ(companion_expand(Matrix::from_rows(f4, {{1}})), Matrix::identity(f2, 2));
    // alpha * 1 = alpha -> (0,1); alpha * alpha = 1 + alpha -> (1,1)
    EXPECT_EQ(companion_expand(Matrix::from_rows(f4, {{2}})), Matrix::from_rows(f2, {{0, 1}, {1, 1}}));
    try {
        companion_expand(Matrix::identity(f2, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PrimeFieldInput);
    }
}

TEST(CompanionExpand, RingHomomorphism) {
    std::mt19937_64 rng(9);
    for (auto [p, m] : std::vector<std::pair<Elem, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto f = Field::make(p, m);
        for (int t = 0; t < 100; ++t) {
            const auto a = random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, rng);
            const auto b = random_matrix(f, a.cols(), 1 + rng() % 3, rng);
            const auto c = random_matrix(f, a.rows(), a.cols(), rng);
            ASSERT_EQ(companion_expand(a * b), companion_expand(a) * companion_expand(b));
            ASSERT_EQ(companion_expand(a + c), companion_expand(a) + companion_expand(c));
        }
    }
}

#include "linkcolor/zlinalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace linkcolor;

namespace {

IntMatrix make(std::size_t r, std::size_t c, std::initializer_list<long long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}

// Fraction-free determinant (Bareiss), test-local.
Int det(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::logic_error("det: square only");
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return n == 0 ? Int(1) : Int(sign * m.at(n - 1, n - 1));
}

IntMatrix diag_of(const SmithForm& sf, std::size_t rows, std::size_t cols) {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < sf.divisors.size(); ++i) d.at(i, i) = sf.divisors[i];
    return d;
}

std::vector<Int> mat_apply(const IntMatrix& m, const std::vector<Int>& x) {
    std::vector<Int> y(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
    return y;
}

bool in_kernel_mod(const IntMatrix& m, const std::vector<Int>& x, long long n) {
    for (Int& v : mat_apply(m, x))
        if (mod_floor(v, n) != 0) return false;
    return true;
}

}  // namespace

TEST(Smith, Singletons) {
    SmithForm sf = smith_normal_form(make(1, 1, {2}));
    ASSERT_EQ(sf.divisors.size(), 1u);
    EXPECT_EQ(sf.divisors[0], 2);
    EXPECT_EQ(sf.rank, 1u);
}

TEST(Smith, DiagTwoThree) {
    SmithForm sf = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
    ASSERT_EQ(sf.divisors.size(), 2u);
    EXPECT_EQ(sf.divisors[0], 1);
    EXPECT_EQ(sf.divisors[1], 6);
}

TEST(Smith, Zero) {
    SmithForm sf = smith_normal_form(IntMatrix(2, 2));
    EXPECT_TRUE(sf.divisors.empty());
    EXPECT_EQ(sf.rank, 0u);
}

TEST(Smith, ReconstructionRandom) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        SmithForm sf = smith_normal_form(m);
        EXPECT_EQ(sf.left * m * sf.right, diag_of(sf, r, c));
        Int dl = det(sf.left), dr = det(sf.right);
        EXPECT_TRUE(dl == 1 || dl == -1);
        EXPECT_TRUE(dr == 1 || dr == -1);
        for (std::size_t i = 0; i + 1 < sf.divisors.size(); ++i) {
            EXPECT_GT(sf.divisors[i], 0);
            EXPECT_EQ(sf.divisors[i + 1] % sf.divisors[i], 0);
        }
    }
}

TEST(Smith, Deterministic) {
    IntMatrix m = make(3, 3, {2, -1, -1, -1, 2, -1, -1, -1, 2});
    SmithForm a = smith_normal_form(m), b = smith_normal_form(m);
    EXPECT_EQ(a.divisors, b.divisors);
    EXPECT_EQ(a.left, b.left);
    EXPECT_EQ(a.right, b.right);
}

TEST(KernelModN, FoxRowPattern) {
    // one trefoil-style relation row: 9 solutions mod 3 over 3 variables
    SolutionModule sol = kernel_mod_n(make(1, 3, {2, -1, -1}), 3);
    EXPECT_EQ(sol.count, 9);
}

TEST(KernelModN, PinnedAndFree) {
    EXPECT_EQ(kernel_mod_n(make(1, 1, {1}), 5).count, 1);
    EXPECT_EQ(kernel_mod_n(make(1, 1, {1}), 12).count, 1);
    EXPECT_EQ(kernel_mod_n(IntMatrix(1, 2), 5).count, 25);
}

TEST(KernelModN, MatchesExhaustiveEnumeration) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 4), entry(-4, 4), mod(2, 6);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        long long n = mod(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);

        long long brute = 0;
        std::vector<Int> x(c, 0);
        for (;;) {
            if (in_kernel_mod(m, x, n)) ++brute;
            std::size_t k = 0;
            while (k < c && ++x[k] == n) x[k++] = 0;
            if (k == c) break;
        }
        SolutionModule sol = kernel_mod_n(m, n);
        EXPECT_EQ(sol.count, brute) << "trial " << trial;
        for (const auto& g : sol.generators) EXPECT_TRUE(in_kernel_mod(m, g, n));
    }
}

TEST(KernelInteger, Basics) {
    auto b1 = kernel_integer(make(1, 2, {1, -1}));
    ASSERT_EQ(b1.size(), 1u);
    EXPECT_EQ(b1[0][0], b1[0][1]);
    EXPECT_NE(b1[0][0], 0);

    auto b2 = kernel_integer(make(3, 3, {2, -1, -1, -1, 2, -1, -1, -1, 2}));
    ASSERT_EQ(b2.size(), 1u);
    EXPECT_EQ(b2[0][0], b2[0][1]);
    EXPECT_EQ(b2[0][1], b2[0][2]);

    EXPECT_TRUE(kernel_integer(IntMatrix::identity(2)).empty());
}

TEST(KernelInteger, ReducesIntoModularKernel) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dim(1, 4), entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        auto basis = kernel_integer(m);
        for (const auto& v : basis) {
            for (const Int& y : mat_apply(m, v)) EXPECT_EQ(y, 0);
            for (long long n : {2, 3, 5}) EXPECT_TRUE(in_kernel_mod(m, v, n));
        }
        SmithForm sf = smith_normal_form(m);
        EXPECT_EQ(basis.size(), m.cols() - sf.rank);
    }
}

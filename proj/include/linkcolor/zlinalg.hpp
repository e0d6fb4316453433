#pragma once

#include <cstddef>
#include <vector>

#include "linkcolor/bigint.hpp"

namespace linkcolor {

// Dense matrix over Z. Row-major, exact entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row(dst) += f * row(src), col(dst) += f * col(src)
    void add_row(std::size_t dst, std::size_t src, const Int& f);
    void add_col(std::size_t dst, std::size_t src, const Int& f);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// left * m * right = diag(divisors), with left/right unimodular and
// d_1 | d_2 | ... | d_r all positive.
struct SmithForm {
    std::vector<Int> divisors;
    std::size_t rank = 0;
    IntMatrix left;
    IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

// The solutions of m*x = 0 (mod n) as a direct sum of cyclic groups:
// every solution is sum(c_i * generators[i]) mod n with 0 <= c_i < orders[i],
// and distinct coefficient tuples give distinct solutions.
struct SolutionModule {
    long long modulus = 0;
    std::vector<std::vector<Int>> generators;
    std::vector<Int> orders;
    Int count;  // product of orders = n^(cols - rank) * prod gcd(d_i, n)
};

SolutionModule kernel_mod_n(const IntMatrix& m, long long n);

// Basis of { x in Z^cols : m*x = 0 }. Empty iff the kernel is trivial.
std::vector<std::vector<Int>> kernel_integer(const IntMatrix& m);

}  // namespace linkcolor

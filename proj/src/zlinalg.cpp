#include "linkcolor/zlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace linkcolor {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, j);
    return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix starting at (t,t).
// Ties resolved by row-major position so the reduction is deterministic.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
            const Int& v = m.at(r, c);
            if (v == 0) continue;
            Int a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    SmithForm sf;
    IntMatrix d = input;
    sf.left = IntMatrix::identity(d.rows());
    sf.right = IntMatrix::identity(d.cols());

    const std::size_t nmin = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(d, t, pr, pc)) break;  // remaining block is zero
        d.swap_rows(t, pr);
        sf.left.swap_rows(t, pr);
        d.swap_cols(t, pc);
        sf.right.swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < d.rows(); ++r) {
                if (d.at(r, t) == 0) continue;
                Int q = d.at(r, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row(r, t, -q);
                    sf.left.add_row(r, t, -q);
                }
                if (d.at(r, t) != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < d.cols(); ++c) {
                if (d.at(t, c) == 0) continue;
                Int q = d.at(t, c) / d.at(t, t);
                if (q != 0) {
                    d.add_col(c, t, -q);
                    sf.right.add_col(c, t, -q);
                }
                if (d.at(t, c) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder survived; re-pivot on the (now smaller) entry.
                std::size_t rr = t, cc = t;
                find_pivot(d, t, rr, cc);
                d.swap_rows(t, rr);
                sf.left.swap_rows(t, rr);
                d.swap_cols(t, cc);
                sf.right.swap_cols(t, cc);
                continue;
            }
            // Row and column are clean; enforce divisibility of the rest.
            bool fixed = true;
            for (std::size_t r = t + 1; r < d.rows() && fixed; ++r)
                for (std::size_t c = t + 1; c < d.cols() && fixed; ++c)
                    if (d.at(r, c) % d.at(t, t) != 0) {
                        d.add_row(t, r, 1);
                        sf.left.add_row(t, r, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            sf.left.negate_row(t);
        }
    }

    for (std::size_t t = 0; t < nmin; ++t)
        if (d.at(t, t) != 0) sf.divisors.push_back(d.at(t, t));
    sf.rank = sf.divisors.size();
    return sf;
}

SolutionModule kernel_mod_n(const IntMatrix& m, long long n) {
    if (n < 2) throw std::invalid_argument("kernel_mod_n: modulus must be >= 2");
    SmithForm sf = smith_normal_form(m);
    SolutionModule sol;
    sol.modulus = n;
    sol.count = 1;
    const Int nn = n;
    const std::size_t cols = m.cols();
    // In transformed coordinates y (x = right*y), the system is d_i*y_i = 0 (mod n):
    // y_i ranges over multiples of n/gcd(d_i, n) for i < rank, free above.
    for (std::size_t i = 0; i < cols; ++i) {
        Int order = (i < sf.rank) ? gcd(sf.divisors[i], nn) : nn;
        if (order == 1) continue;
        Int step = nn / order;
        std::vector<Int> gen(cols);
        for (std::size_t r = 0; r < cols; ++r) gen[r] = mod_floor(step * sf.right.at(r, i), nn);
        sol.generators.push_back(std::move(gen));
        sol.orders.push_back(order);
        sol.count *= order;
    }
    return sol;
}

std::vector<std::vector<Int>> kernel_integer(const IntMatrix& m) {
    SmithForm sf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    for (std::size_t i = sf.rank; i < m.cols(); ++i) basis.push_back(sf.right.col(i));
    return basis;
}

}  // namespace linkcolor

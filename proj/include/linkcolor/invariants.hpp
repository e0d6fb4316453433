#pragma once

#include <vector>

#include "linkcolor/diagram.hpp"
#include "linkcolor/zlinalg.hpp"

namespace linkcolor {

// Symmetric pairwise linking numbers; diagonal entries are zero.
class LinkingMatrix {
public:
    explicit LinkingMatrix(int components) : n_(components), e_(components * components, 0) {}
    int components() const { return n_; }
    long long at(int i, int j) const { return e_[i * n_ + j]; }
    long long& at(int i, int j) { return e_[i * n_ + j]; }
    long long row_sum(int i) const;  // lk(l_i, L - l_i)
    long long total() const;
    bool operator==(const LinkingMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<long long> e_;
};

LinkingMatrix linking_matrix(const Diagram& d);

// One row per crossing: +2 at the over strand, -1 at each under strand,
// coefficients summed when strands coincide. Columns are merged arcs.
IntMatrix coloring_matrix(const Diagram& d);

struct DeterminantResult {
    Int value;               // 0 when free_rank >= 2, else product of divisors
    std::size_t free_rank;   // arcs - rank of the coloring matrix
    std::vector<Int> divisors;
};

DeterminantResult determinant(const Diagram& d);

}  // namespace linkcolor

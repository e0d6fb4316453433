#include "linkcolor/invariants.hpp"

namespace linkcolor {

long long LinkingMatrix::row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
}

long long LinkingMatrix::total() const {
    long long s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) s += at(i, j);
    return s;
}

LinkingMatrix linking_matrix(const Diagram& d) {
    LinkingMatrix m(d.component_count());
    for (const Crossing& x : d.crossings()) {
        int cu = d.component_of_label(x.under_in());
        int co = d.component_of_label(x.over_in());
        if (cu == co) continue;
        m.at(cu, co) += x.sign;
        m.at(co, cu) += x.sign;
    }
    for (int i = 0; i < m.components(); ++i)
        for (int j = 0; j < m.components(); ++j) {
            if (m.at(i, j) % 2 != 0)
                throw std::runtime_error("non-integral linking number: diagram is not planar");
            m.at(i, j) /= 2;
        }
    return m;
}

IntMatrix coloring_matrix(const Diagram& d) {
    IntMatrix m(d.crossings().size(), d.arc_count());
    for (std::size_t r = 0; r < d.crossings().size(); ++r) {
        const Crossing& x = d.crossings()[r];
        m.at(r, d.over_arc(x)) += 2;
        m.at(r, d.under_in_arc(x)) -= 1;
        m.at(r, d.under_out_arc(x)) -= 1;
    }
    return m;
}

DeterminantResult determinant(const Diagram& d) {
    SmithForm sf = smith_normal_form(coloring_matrix(d));
    DeterminantResult res;
    res.divisors = sf.divisors;
    res.free_rank = d.arc_count() - sf.rank;
    if (res.free_rank >= 2) {
        res.value = 0;
    } else {
        res.value = 1;
        for (const Int& v : sf.divisors) res.value *= v;
    }
    return res;
}

}  // namespace linkcolor

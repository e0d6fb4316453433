#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkcolor/bigint.hpp"

namespace linkcolor {

// Degree of a dihedral group: a finite n >= 2, or infinite.
// The infinite case is handled uniformly by leaving exponents unreduced.
class Modulus {
public:
    static Modulus finite(long long n) {
        if (n < 2) throw std::invalid_argument("dihedral degree must be >= 2");
        Modulus m;
        m.n_ = n;
        return m;
    }
    static Modulus infinite() { return Modulus{}; }

    bool is_infinite() const { return n_ == 0; }
    long long value() const {
        if (is_infinite()) throw std::logic_error("value() on infinite modulus");
        return n_;
    }
    std::string str() const { return is_infinite() ? "inf" : std::to_string(n_); }
    bool operator==(const Modulus&) const = default;

private:
    long long n_ = 0;  // 0 encodes infinity
};

// a^eps * b^k in D_n. eps=1 are the reflections a_k = a b^k (all of order 2),
// eps=0 the rotations b_k, with b_0 = e. For finite n, k is kept in [0, n).
struct DihedralElement {
    Modulus mod;
    int eps = 0;
    Int k;

    static DihedralElement identity(Modulus m) { return rotation(m, 0); }
    static DihedralElement rotation(Modulus m, Int kk);
    static DihedralElement reflection(Modulus m, Int kk);

    bool is_identity() const { return eps == 0 && k == 0; }
    bool is_reflection() const { return eps == 1; }
    bool is_rotation() const { return eps == 0; }

    DihedralElement inverse() const;
    std::string str() const;  // "e", "b3", "a0", "b-2" for infinite degree

    bool operator==(const DihedralElement&) const = default;
    bool operator<(const DihedralElement& o) const {
        if (eps != o.eps) return eps < o.eps;
        return k < o.k;
    }
};

DihedralElement multiply(const DihedralElement& g, const DihedralElement& h);

// Color of the outgoing under arc at a crossing with over color `over`,
// incoming under color `under_in` and the given crossing sign:
// over^(-s) * under_in * over^s.
DihedralElement under_arc_rule(const DihedralElement& over, const DihedralElement& under_in,
                               int sign);

std::optional<DihedralElement> parse_element(const std::string& text, Modulus mod);

// <b^d> (cyclic) or <b^d, a b^t> (dihedral); d = 0 with kind cyclic never occurs,
// d describes the rotation step (a divisor of n when finite).
struct SubgroupDescriptor {
    enum class Kind { trivial, cyclic, dihedral };
    Kind kind = Kind::trivial;
    Int d;
    Int t;  // reflection offset, present iff kind == dihedral

    bool full(Modulus mod) const {
        (void)mod;
        return kind == Kind::dihedral && d == 1;
    }
};

SubgroupDescriptor subgroup_generated(const std::vector<DihedralElement>& gens, Modulus mod);
bool generates_full(const std::vector<DihedralElement>& gens, Modulus mod);

}  // namespace linkcolor

#include "linkcolor/dihedral.hpp"

#include <cctype>

namespace linkcolor {

namespace {
Int reduce(const Int& k, const Modulus& m) {
    if (m.is_infinite()) return k;
    return mod_floor(k, Int(m.value()));
}
}  // namespace

DihedralElement DihedralElement::rotation(Modulus m, Int kk) {
    return DihedralElement{m, 0, reduce(kk, m)};
}

DihedralElement DihedralElement::reflection(Modulus m, Int kk) {
    return DihedralElement{m, 1, reduce(kk, m)};
}

DihedralElement DihedralElement::inverse() const {
    if (eps == 1) return *this;  // reflections are involutions
    return rotation(mod, -k);
}

std::string DihedralElement::str() const {
    if (is_identity()) return "e";
    return (eps == 1 ? "a" : "b") + k.str();
}

// a^e1 b^k1 * a^e2 b^k2 = a^(e1+e2) b^(k2 + (-1)^e2 k1), from b a = a b^-1.
DihedralElement multiply(const DihedralElement& g, const DihedralElement& h) {
    if (!(g.mod == h.mod)) throw std::invalid_argument("dihedral degree mismatch");
    int eps = (g.eps + h.eps) & 1;
    Int k = h.k + (h.eps == 1 ? -g.k : g.k);
    return DihedralElement{g.mod, eps, reduce(k, g.mod)};
}

DihedralElement under_arc_rule(const DihedralElement& over, const DihedralElement& under_in,
                               int sign) {
    DihedralElement g = sign > 0 ? over : over.inverse();
    return multiply(multiply(g.inverse(), under_in), g);
}

std::optional<DihedralElement> parse_element(const std::string& text, Modulus mod) {
    if (text == "e") return DihedralElement::identity(mod);
    if (text.size() < 2) return std::nullopt;
    char c = text[0];
    if (c != 'a' && c != 'b') return std::nullopt;
    std::size_t i = 1;
    if (text[i] == '-') ++i;
    if (i >= text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    Int k(text.substr(1));
    return c == 'a' ? DihedralElement::reflection(mod, k) : DihedralElement::rotation(mod, k);
}

SubgroupDescriptor subgroup_generated(const std::vector<DihedralElement>& gens, Modulus mod) {
    SubgroupDescriptor out;
    if (gens.empty()) return out;

    // d = gcd of n (0 when infinite), all rotation exponents, and all pairwise
    // differences of reflection exponents; pairwise differences reduce to
    // differences against the first reflection.
    Int d = mod.is_infinite() ? Int(0) : Int(mod.value());
    std::optional<Int> first_reflection;
    for (const auto& g : gens) {
        if (!(g.mod == mod)) throw std::invalid_argument("dihedral degree mismatch");
        if (g.is_reflection()) {
            if (!first_reflection)
                first_reflection = g.k;
            else
                d = gcd(d, g.k - *first_reflection);
        } else {
            d = gcd(d, g.k);
        }
    }

    if (!first_reflection) {
        bool trivial = mod.is_infinite() ? (d == 0) : (d == mod.value());
        if (trivial) return out;  // only e
        out.kind = SubgroupDescriptor::Kind::cyclic;
        out.d = d;
        return out;
    }
    out.kind = SubgroupDescriptor::Kind::dihedral;
    out.d = d;
    out.t = (d > 0) ? mod_floor(*first_reflection, d) : *first_reflection;
    return out;
}

bool generates_full(const std::vector<DihedralElement>& gens, Modulus mod) {
    return subgroup_generated(gens, mod).full(mod);
}

}  // namespace linkcolor

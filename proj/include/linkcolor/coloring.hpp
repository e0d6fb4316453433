#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linkcolor/diagram.hpp"
#include "linkcolor/dihedral.hpp"
#include "linkcolor/zlinalg.hpp"

namespace linkcolor {

// Tone of a component: R-toned components are colored by reflections a_i,
// T-toned ones by rotations b_j. Any coloring has a constant tone on each
// component, so colorings split into (tone, exponent vector) pairs and the
// crossing relations become homogeneous linear systems in the exponents.
enum class Tone : char { R = 'R', T = 'T' };

struct ToneAssignment {
    std::vector<Tone> tones;  // one per component

    static ToneAssignment all_reflection(int components) {
        return ToneAssignment{std::vector<Tone>(components, Tone::R)};
    }
    static ToneAssignment from_mask(int components, unsigned long long t_mask);

    Tone operator[](int comp) const { return tones[comp]; }
    int t_count() const;
    std::string str() const;  // e.g. "RTR"
    bool operator==(const ToneAssignment&) const = default;
};

struct Coloring {
    Modulus mod;
    ToneAssignment tone;
    std::vector<Int> exponents;  // per merged arc, reduced mod n when finite

    bool operator==(const Coloring&) const = default;
};

DihedralElement coloring_element(const Diagram& d, const Coloring& c, int arc);
std::vector<DihedralElement> coloring_image(const Diagram& d, const Coloring& c);
bool is_two_tone(const Diagram& d, const Coloring& c);
bool is_surjective(const Diagram& d, const Coloring& c);
// image inside {e} + reflections, i.e. induced by a Fox coloring of a sublink
bool is_fox_type(const Diagram& d, const Coloring& c);

std::string coloring_text(const Diagram& d, const Coloring& c);
std::string coloring_digest(const Coloring& c);

// Homogeneous system over the arc exponents for a fixed tone, one row per
// crossing. With an all-R tone this is the Fox relation matrix up to row sign.
IntMatrix index_system(const Diagram& d, const ToneAssignment& tone);

// Kernel of index_system mod n, or the integer kernel lattice for infinite n.
struct ColoringSpace {
    Modulus mod;
    ToneAssignment tone;
    SolutionModule module;                  // finite modulus
    std::vector<std::vector<Int>> lattice;  // infinite modulus
};

ColoringSpace coloring_space(const Diagram& d, const ToneAssignment& tone, Modulus mod);

struct SearchOptions {
    Int enumeration_cap = 1000000;
};

// All colorings of a finite-modulus space, in deterministic odometer order.
std::vector<Coloring> enumerate_space(const Diagram& d, const ColoringSpace& space,
                                      const Int& cap);
// All D_n-colorings over every tone assignment.
std::vector<Coloring> all_colorings(const Diagram& d, long long n, const Int& cap);

struct TwoToneVerdict {
    bool colorable = false;
    std::optional<Coloring> witness;
    std::string obstruction;
};

TwoToneVerdict exists_two_tone(const Diagram& d, Modulus mod, const SearchOptions& opt = {});
std::optional<Coloring> exists_surjection(const Diagram& d, Modulus mod,
                                          const SearchOptions& opt = {});

struct FoxResult {
    bool colorable = false;
    Int count;  // all Fox n-colorings, constants included
};

FoxResult fox_colorable(const Diagram& d, long long n);

struct CheckResult {
    bool ok = true;
    int crossing = -1;  // first violated crossing when !ok
    explicit operator bool() const { return ok; }
};

// Verifies the defining relation x z = y x (resp. z x = x y) at every
// crossing, via plain group multiplication.
CheckResult check_coloring(const Diagram& d, const Coloring& c);

// Breadth-first completion of a partial coloring across crossings.
struct Conflict {
    int crossing = -1;  // -1: conflicting seeds
    std::string detail;
};
struct Underdetermined {
    std::vector<int> arcs;
};
using PropagateResult = std::variant<Coloring, Conflict, Underdetermined>;

PropagateResult propagate(const Diagram& d, Modulus mod,
                          const std::vector<std::pair<int, DihedralElement>>& seeds_by_label);

// Reference oracle: enumerate every map arcs -> D_n and keep those satisfying
// the defining relation at each crossing. Test/benchmark use only.
struct OracleOptions {
    Int cap = 10000000;
    bool parallel = true;
};

std::vector<Coloring> brute_force_colorings(const Diagram& d, long long n,
                                            const OracleOptions& opt = {});

}  // namespace linkcolor

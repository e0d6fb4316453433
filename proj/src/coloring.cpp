#include "linkcolor/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linkcolor {

// ---------------------------------------------------------------------------
// Tones and decoded colorings

ToneAssignment ToneAssignment::from_mask(int components, unsigned long long t_mask) {
    ToneAssignment t;
    t.tones.resize(components);
    for (int i = 0; i < components; ++i)
        t.tones[i] = (t_mask >> i) & 1 ? Tone::T : Tone::R;
    return t;
}

int ToneAssignment::t_count() const {
    return static_cast<int>(std::count(tones.begin(), tones.end(), Tone::T));
}

std::string ToneAssignment::str() const {
    std::string s;
    for (Tone t : tones) s += static_cast<char>(t);
    return s;
}

DihedralElement coloring_element(const Diagram& d, const Coloring& c, int arc) {
    Tone t = c.tone[d.arc_component(arc)];
    return t == Tone::R ? DihedralElement::reflection(c.mod, c.exponents[arc])
                        : DihedralElement::rotation(c.mod, c.exponents[arc]);
}

std::vector<DihedralElement> coloring_image(const Diagram& d, const Coloring& c) {
    std::vector<DihedralElement> out;
    out.reserve(d.arc_count());
    for (int a = 0; a < d.arc_count(); ++a) out.push_back(coloring_element(d, c, a));
    return out;
}

bool is_two_tone(const Diagram& d, const Coloring& c) {
    bool reflection = false, rotation = false;
    for (const DihedralElement& g : coloring_image(d, c)) {
        if (g.is_identity()) return false;
        (g.is_reflection() ? reflection : rotation) = true;
    }
    return reflection && rotation;
}

bool is_surjective(const Diagram& d, const Coloring& c) {
    return generates_full(coloring_image(d, c), c.mod);
}

bool is_fox_type(const Diagram& d, const Coloring& c) {
    for (const DihedralElement& g : coloring_image(d, c))
        if (g.is_rotation() && !g.is_identity()) return false;
    return true;
}

std::string coloring_text(const Diagram& d, const Coloring& c) {
    std::ostringstream out;
    out << "modulus: " << c.mod.str() << "\ntones: " << c.tone.str() << '\n';
    for (int a = 0; a < d.arc_count(); ++a)
        out << "arc " << d.arc_min_label(a) << ": " << coloring_element(d, c, a).str() << '\n';
    return out.str();
}

std::string coloring_digest(const Coloring& c) {
    std::string s = c.mod.str() + ":" + c.tone.str() + ":";
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
        if (i) s += ',';
        s += c.exponents[i].str();
    }
    return s;
}

// ---------------------------------------------------------------------------
// Linear systems per tone

IntMatrix index_system(const Diagram& d, const ToneAssignment& tone) {
    IntMatrix m(d.crossings().size(), d.arc_count());
    for (std::size_t r = 0; r < d.crossings().size(); ++r) {
        const Crossing& cr = d.crossings()[r];
        int x = d.over_arc(cr), y = d.under_in_arc(cr), z = d.under_out_arc(cr);
        Tone ot = tone[d.arc_component(x)];
        Tone ut = tone[d.arc_component(y)];
        if (ot == Tone::R && ut == Tone::R) {
            // a_m over: k_z = 2 k_x - k_y (the Fox relation)
            m.at(r, z) += 1;
            m.at(r, y) += 1;
            m.at(r, x) -= 2;
        } else if (ot == Tone::R && ut == Tone::T) {
            // conjugating b_j by a reflection inverts it
            m.at(r, z) += 1;
            m.at(r, y) += 1;
        } else if (ot == Tone::T && ut == Tone::R) {
            // k_z = k_y + 2 s k_x
            m.at(r, z) += 1;
            m.at(r, y) -= 1;
            m.at(r, x) -= 2 * cr.sign;
        } else {
            // rotations commute
            m.at(r, z) += 1;
            m.at(r, y) -= 1;
        }
    }
    return m;
}

ColoringSpace coloring_space(const Diagram& d, const ToneAssignment& tone, Modulus mod) {
    ColoringSpace sp;
    sp.mod = mod;
    sp.tone = tone;
    IntMatrix sys = index_system(d, tone);
    if (mod.is_infinite())
        sp.lattice = kernel_integer(sys);
    else
        sp.module = kernel_mod_n(sys, mod.value());
    return sp;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Coloring> enumerate_space(const Diagram& d, const ColoringSpace& space,
                                      const Int& cap) {
    if (space.mod.is_infinite())
        throw std::invalid_argument("enumerate_space: infinite modulus");
    const SolutionModule& sm = space.module;
    if (sm.count > cap)
        throw CapacityError("coloring space with " + sm.count.str() +
                            " solutions exceeds enumeration cap " + cap.str());
    const Int n = space.mod.value();
    const int arcs = d.arc_count();
    const int gens = static_cast<int>(sm.generators.size());

    std::vector<Coloring> out;
    out.reserve(sm.count.convert_to<std::size_t>());
    std::vector<Int> digits(gens, 0);
    std::vector<Int> cur(arcs, 0);
    for (;;) {
        out.push_back(Coloring{space.mod, space.tone, cur});
        // odometer step, last generator fastest; each rolled digit adds its
        // generator once (order * generator vanishes mod n)
        int i = gens - 1;
        for (; i >= 0; --i) {
            for (int a = 0; a < arcs; ++a) cur[a] = mod_floor(cur[a] + sm.generators[i][a], n);
            digits[i] += 1;
            if (digits[i] < sm.orders[i]) break;
            digits[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

namespace {

// T-masks over components: empty mask = all reflections first, then by
// ascending rotation count, ties by mask value. Deterministic search order.
std::vector<unsigned long long> ordered_masks(int components, bool need_r, bool need_t) {
    if (components > 30) throw CapacityError("too many components for tone enumeration");
    std::vector<unsigned long long> masks;
    unsigned long long full = (1ull << components) - 1;
    for (unsigned long long m = 0; m <= full; ++m) {
        if (need_t && m == 0) continue;
        if (need_r && m == full && components > 0) continue;
        masks.push_back(m);
    }
    std::stable_sort(masks.begin(), masks.end(), [](auto a, auto b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    return masks;
}

std::vector<int> arcs_with_tone(const Diagram& d, const ToneAssignment& tone, Tone t) {
    std::vector<int> out;
    for (int a = 0; a < d.arc_count(); ++a)
        if (tone[d.arc_component(a)] == t) out.push_back(a);
    return out;
}

Int max_abs_entry(const std::vector<std::vector<Int>>& vs) {
    Int m = 0;
    for (const auto& v : vs)
        for (const Int& x : v) m = std::max(m, Int(abs(x)));
    return m;
}

void require_dihedral_modulus(Modulus mod) {
    if (!mod.is_infinite() && mod.value() < 3)
        throw std::invalid_argument("dihedral searches need degree >= 3 or infinite");
}

}  // namespace

std::vector<Coloring> all_colorings(const Diagram& d, long long n, const Int& cap) {
    const int c = d.component_count();
    auto masks = ordered_masks(c, false, false);
    std::vector<ColoringSpace> spaces;
    Int total = 0;
    for (auto m : masks) {
        spaces.push_back(coloring_space(d, ToneAssignment::from_mask(c, m), Modulus::finite(n)));
        total += spaces.back().module.count;
    }
    if (total > cap)
        throw CapacityError("total coloring count " + total.str() + " exceeds cap " + cap.str());
    std::vector<Coloring> out;
    for (const auto& sp : spaces) {
        auto part = enumerate_space(d, sp, cap);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Two-tone search

TwoToneVerdict exists_two_tone(const Diagram& d, Modulus mod, const SearchOptions& opt) {
    require_dihedral_modulus(mod);
    TwoToneVerdict verdict;
    const int c = d.component_count();
    if (c < 2) {
        verdict.obstruction = "fewer than two components";
        return verdict;
    }

    for (auto mask : ordered_masks(c, true, true)) {
        ToneAssignment tone = ToneAssignment::from_mask(c, mask);
        ColoringSpace sp = coloring_space(d, tone, mod);
        std::vector<int> t_arcs = arcs_with_tone(d, tone, Tone::T);

        if (!mod.is_infinite()) {
            for (Coloring& col : enumerate_space(d, sp, opt.enumeration_cap)) {
                bool ok = std::all_of(t_arcs.begin(), t_arcs.end(),
                                      [&](int a) { return col.exponents[a] != 0; });
                if (ok) {
                    verdict.colorable = true;
                    verdict.witness = std::move(col);
                    return verdict;
                }
            }
            continue;
        }

        // Infinite degree: a rotation coordinate identically zero on the
        // lattice rules this tone out; otherwise a combination with spread-out
        // coefficients hits every rotation arc at once.
        if (sp.lattice.empty()) continue;
        bool covered = std::all_of(t_arcs.begin(), t_arcs.end(), [&](int a) {
            return std::any_of(sp.lattice.begin(), sp.lattice.end(),
                               [&](const std::vector<Int>& v) { return v[a] != 0; });
        });
        if (!covered) continue;

        auto combine = [&](const Int& base) {
            std::vector<Int> x(d.arc_count(), 0);
            Int coeff = 1;
            for (const auto& v : sp.lattice) {
                for (int a = 0; a < d.arc_count(); ++a) x[a] += coeff * v[a];
                coeff *= base;
            }
            return x;
        };
        std::vector<Int> x = combine(1);  // plain sum keeps witnesses small
        bool ok = std::all_of(t_arcs.begin(), t_arcs.end(), [&](int a) { return x[a] != 0; });
        if (!ok) x = combine(max_abs_entry(sp.lattice) + 2);
        Coloring col{mod, tone, std::move(x)};
        if (!std::all_of(t_arcs.begin(), t_arcs.end(),
                         [&](int a) { return col.exponents[a] != 0; }))
            throw std::logic_error("two-tone scale separation failed");
        if (!check_coloring(d, col).ok)
            throw std::logic_error("two-tone witness violates a crossing relation");
        verdict.colorable = true;
        verdict.witness = std::move(col);
        return verdict;
    }
    verdict.obstruction = "no mixed tone admits nonzero rotation exponents";
    return verdict;
}

// ---------------------------------------------------------------------------
// Surjection search

namespace {

// Linear forms whose joint gcd measures the subgroup generated by the image:
// rotation-arc exponents plus differences of reflection-arc exponents.
std::vector<std::vector<Int>> generation_forms(const Diagram& d, const ToneAssignment& tone,
                                               const std::vector<std::vector<Int>>& basis) {
    std::vector<int> t_arcs = arcs_with_tone(d, tone, Tone::T);
    std::vector<int> r_arcs = arcs_with_tone(d, tone, Tone::R);
    std::vector<std::vector<Int>> rows;
    for (int a : t_arcs) {
        std::vector<Int> row;
        for (const auto& v : basis) row.push_back(v[a]);
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < r_arcs.size(); ++i) {
        std::vector<Int> row;
        for (const auto& v : basis) row.push_back(v[r_arcs[i]] - v[r_arcs[0]]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<Coloring> surjection_infinite(const Diagram& d, const ToneAssignment& tone,
                                            const ColoringSpace& sp) {
    if (sp.lattice.empty()) return std::nullopt;
    auto rows = generation_forms(d, tone, sp.lattice);
    if (rows.empty()) return std::nullopt;
    IntMatrix w(rows.size(), sp.lattice.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < sp.lattice.size(); ++c) w.at(r, c) = rows[r][c];
    SmithForm sf = smith_normal_form(w);
    if (sf.rank == 0 || sf.divisors[0] != 1) return std::nullopt;

    // Coefficients from the first column of the right transform give a lattice
    // element whose form values have gcd d_1 = 1.
    std::vector<Int> x(d.arc_count(), 0);
    for (std::size_t i = 0; i < sp.lattice.size(); ++i) {
        Int coeff = sf.right.at(i, 0);
        if (coeff == 0) continue;
        for (int a = 0; a < d.arc_count(); ++a) x[a] += coeff * sp.lattice[i][a];
    }
    Coloring col{Modulus::infinite(), tone, std::move(x)};
    if (!check_coloring(d, col).ok || !is_surjective(d, col))
        throw std::logic_error("surjection witness failed validation");
    return col;
}

}  // namespace

std::optional<Coloring> exists_surjection(const Diagram& d, Modulus mod,
                                          const SearchOptions& opt) {
    require_dihedral_modulus(mod);
    const int c = d.component_count();
    for (auto mask : ordered_masks(c, true, false)) {  // need a reflection-toned component
        ToneAssignment tone = ToneAssignment::from_mask(c, mask);
        ColoringSpace sp = coloring_space(d, tone, mod);
        if (mod.is_infinite()) {
            if (auto w = surjection_infinite(d, tone, sp)) return w;
            continue;
        }
        for (Coloring& col : enumerate_space(d, sp, opt.enumeration_cap))
            if (is_surjective(d, col)) return std::move(col);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fox colorings

FoxResult fox_colorable(const Diagram& d, long long n) {
    if (n < 3) throw std::invalid_argument("fox_colorable needs n >= 3");
    FoxResult res;
    if (d.arc_count() == 0) {
        res.count = 1;
        return res;
    }
    ColoringSpace sp =
        coloring_space(d, ToneAssignment::all_reflection(d.component_count()), Modulus::finite(n));
    res.count = sp.module.count;
    res.colorable = res.count > n;  // the n constant colorings are always there
    return res;
}

// ---------------------------------------------------------------------------
// Checking

CheckResult check_coloring(const Diagram& d, const Coloring& c) {
    if (static_cast<int>(c.exponents.size()) != d.arc_count())
        throw std::invalid_argument("check_coloring: exponent vector size mismatch");
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        const Crossing& cr = d.crossings()[i];
        DihedralElement x = coloring_element(d, c, d.over_arc(cr));
        DihedralElement y = coloring_element(d, c, d.under_in_arc(cr));
        DihedralElement z = coloring_element(d, c, d.under_out_arc(cr));
        bool ok = cr.sign > 0 ? multiply(x, z) == multiply(y, x)
                              : multiply(z, x) == multiply(x, y);
        if (!ok) return CheckResult{false, static_cast<int>(i)};
    }
    return CheckResult{};
}

// ---------------------------------------------------------------------------
// Propagation

namespace {

enum class Solve2 { unique, ambiguous, none };

// 2*m = v in Z/n (or Z when infinite)
Solve2 solve_double(const Int& v, Modulus mod, Int& m) {
    if (mod.is_infinite()) {
        if (v % 2 != 0) return Solve2::none;
        m = v / 2;
        return Solve2::unique;
    }
    long long n = mod.value();
    if (n % 2 == 1) {
        Int inv2 = (n + 1) / 2;
        m = mod_floor(v * inv2, n);
        return Solve2::unique;
    }
    return mod_floor(v, 2) == 0 ? Solve2::ambiguous : Solve2::none;
}

}  // namespace

PropagateResult propagate(const Diagram& d, Modulus mod,
                          const std::vector<std::pair<int, DihedralElement>>& seeds_by_label) {
    const int arcs = d.arc_count();
    std::vector<std::optional<DihedralElement>> value(arcs);
    std::vector<int> comp_eps(d.component_count(), -1);

    std::vector<std::vector<int>> arc_crossings(arcs);
    std::vector<std::vector<int>> comp_over_crossings(d.component_count());
    for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i) {
        const Crossing& cr = d.crossings()[i];
        for (int a : {d.over_arc(cr), d.under_in_arc(cr), d.under_out_arc(cr)})
            arc_crossings[a].push_back(i);
        comp_over_crossings[d.arc_component(d.over_arc(cr))].push_back(i);
    }

    std::vector<int> queue;
    std::optional<Conflict> conflict;
    auto assign = [&](int arc, const DihedralElement& g, int at_crossing) {
        if (conflict) return;
        if (value[arc]) {
            if (!(*value[arc] == g))
                conflict = Conflict{at_crossing, "arc " + std::to_string(d.arc_min_label(arc)) +
                                                     " derived as " + value[arc]->str() +
                                                     " and " + g.str()};
            return;
        }
        int comp = d.arc_component(arc);
        if (comp_eps[comp] >= 0 && comp_eps[comp] != g.eps) {
            conflict = Conflict{at_crossing, "component tone mismatch at arc " +
                                                 std::to_string(d.arc_min_label(arc))};
            return;
        }
        if (comp_eps[comp] < 0) {
            // a freshly known tone can unblock over-arc derivations elsewhere
            comp_eps[comp] = g.eps;
            for (int ci : comp_over_crossings[comp]) queue.push_back(ci);
        }
        value[arc] = g;
        for (int ci : arc_crossings[arc]) queue.push_back(ci);
    };

    for (const auto& [label, g] : seeds_by_label) {
        if (label < 1 || label > d.label_count())
            throw std::invalid_argument("propagate: bad seed arc label");
        if (!(g.mod == mod)) throw std::invalid_argument("propagate: seed modulus mismatch");
        assign(d.arc_of_label(label), g, -1);
        if (conflict) return *conflict;
    }

    auto process = [&](int ci) {
        const Crossing& cr = d.crossings()[ci];
        int xa = d.over_arc(cr), ya = d.under_in_arc(cr), za = d.under_out_arc(cr);
        const auto &x = value[xa], &y = value[ya], &z = value[za];
        if (x && y) assign(za, under_arc_rule(*x, *y, cr.sign), ci);
        if (conflict) return;
        if (x && z) assign(ya, under_arc_rule(*x, *z, -cr.sign), ci);
        if (conflict || x || !y || !z) return;

        // Both unders known, over unknown: constrain or derive the over color.
        if (y->eps != z->eps) {
            conflict = Conflict{ci, "under strand changes tone"};
            return;
        }
        int xeps = comp_eps[d.arc_component(xa)];
        if (xeps < 0) return;  // over tone unknown; leave for later
        if (y->is_rotation()) {
            // over reflection forces z = -y; over rotation forces z = y
            Int want = xeps == 1 ? Int(-y->k) : y->k;
            if (!mod.is_infinite()) want = mod_floor(want, mod.value());
            if (z->k != want) conflict = Conflict{ci, "rotation exponents disagree"};
            return;  // the over color itself is unconstrained here
        }
        Int m;
        Solve2 s = xeps == 1 ? solve_double(y->k + z->k, mod, m)
                             : solve_double(Int(cr.sign) * (z->k - y->k), mod, m);
        if (s == Solve2::none)
            conflict = Conflict{ci, "no over color satisfies the crossing"};
        else if (s == Solve2::unique)
            assign(xa, xeps == 1 ? DihedralElement::reflection(mod, m)
                                 : DihedralElement::rotation(mod, m),
                   ci);
    };

    while (!queue.empty() && !conflict) {
        int ci = queue.back();
        queue.pop_back();
        process(ci);
    }
    if (conflict) return *conflict;

    std::vector<int> unknown;
    for (int a = 0; a < arcs; ++a)
        if (!value[a]) unknown.push_back(a);
    if (!unknown.empty()) return Underdetermined{std::move(unknown)};

    Coloring col;
    col.mod = mod;
    col.tone.tones.resize(d.component_count());
    for (int comp = 0; comp < d.component_count(); ++comp)
        col.tone.tones[comp] = comp_eps[comp] == 1 ? Tone::R : Tone::T;
    col.exponents.resize(arcs);
    for (int a = 0; a < arcs; ++a) col.exponents[a] = value[a]->k;
    CheckResult chk = check_coloring(d, col);
    if (!chk.ok) return Conflict{chk.crossing, "completed coloring violates a crossing"};
    return col;
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Works from the defining relation with its own compact
// group arithmetic; the solver never feeds it.

namespace {

struct OracleTables {
    int n;
    int order;                  // 2n elements: rotations 0..n-1, reflections n..2n-1
    std::vector<uint16_t> mul;  // order x order

    explicit OracleTables(long long nn) : n(static_cast<int>(nn)), order(2 * n) {
        mul.resize(order * order);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                int ea = a >= n, ka = a % n;
                int eb = b >= n, kb = b % n;
                int eps = ea ^ eb;
                int k = (kb + (eb ? n - ka : ka)) % n;
                mul[a * order + b] = static_cast<uint16_t>(eps * n + k);
            }
    }
    int product(int a, int b) const { return mul[a * order + b]; }
};

struct OracleCrossing {
    int x, y, z, sign;
};

bool oracle_accepts(const OracleTables& t, const std::vector<OracleCrossing>& cs,
                    const std::vector<int>& color) {
    for (const OracleCrossing& c : cs) {
        int x = color[c.x], y = color[c.y], z = color[c.z];
        bool ok = c.sign > 0 ? t.product(x, z) == t.product(y, x)
                             : t.product(z, x) == t.product(x, y);
        if (!ok) return false;
    }
    return true;
}

Coloring oracle_decode(const Diagram& d, const OracleTables& t, const std::vector<int>& color,
                       long long n) {
    Coloring col;
    col.mod = Modulus::finite(n);
    col.tone.tones.assign(d.component_count(), Tone::T);
    std::vector<int> seen(d.component_count(), -1);
    col.exponents.resize(d.arc_count());
    for (int a = 0; a < d.arc_count(); ++a) {
        int eps = color[a] >= t.n;
        int comp = d.arc_component(a);
        if (seen[comp] < 0) {
            seen[comp] = eps;
            col.tone.tones[comp] = eps ? Tone::R : Tone::T;
        } else if (seen[comp] != eps) {
            throw std::logic_error("oracle: component mixes tones");
        }
        col.exponents[a] = color[a] % t.n;
    }
    return col;
}

void oracle_range(const Diagram& d, const OracleTables& t,
                  const std::vector<OracleCrossing>& cs, long long n, unsigned long long from,
                  unsigned long long to, std::vector<Coloring>& out) {
    const int arcs = d.arc_count();
    std::vector<int> digits(arcs, 0);
    unsigned long long rest = from;
    for (int a = 0; a < arcs; ++a) {
        digits[a] = static_cast<int>(rest % t.order);
        rest /= t.order;
    }
    for (unsigned long long idx = from; idx < to; ++idx) {
        if (oracle_accepts(t, cs, digits)) out.push_back(oracle_decode(d, t, digits, n));
        for (int a = 0; a < arcs; ++a) {
            if (++digits[a] < t.order) break;
            digits[a] = 0;
        }
    }
}

}  // namespace

std::vector<Coloring> brute_force_colorings(const Diagram& d, long long n,
                                            const OracleOptions& opt) {
    if (n < 2) throw std::invalid_argument("brute force needs n >= 2");
    const int arcs = d.arc_count();
    OracleTables tables(n);
    Int total = 1;
    for (int a = 0; a < arcs; ++a) total *= tables.order;
    if (total > opt.cap)
        throw CapacityError("oracle space of " + total.str() + " assignments exceeds cap " +
                            opt.cap.str());
    const auto total_u = total.convert_to<unsigned long long>();

    std::vector<OracleCrossing> cs;
    for (const Crossing& cr : d.crossings())
        cs.push_back({d.over_arc(cr), d.under_in_arc(cr), d.under_out_arc(cr), cr.sign});

    bool parallel = opt.parallel;
#ifndef _OPENMP
    parallel = false;
#endif
    if (!parallel || total_u < 1u << 16) {
        std::vector<Coloring> out;
        oracle_range(d, tables, cs, n, 0, total_u, out);
        return out;
    }

#ifdef _OPENMP
    int threads = omp_get_max_threads();
    int chunks = std::max(1, threads * 8);
    unsigned long long step = (total_u + chunks - 1) / chunks;
    std::vector<std::vector<Coloring>> parts(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
        unsigned long long lo = step * c;
        unsigned long long hi = std::min(total_u, lo + step);
        if (lo < hi) oracle_range(d, tables, cs, n, lo, hi, parts[c]);
    }
    std::vector<Coloring> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()),
                                     std::make_move_iterator(p.end()));
    return out;
#else
    std::vector<Coloring> out;
    oracle_range(d, tables, cs, n, 0, total_u, out);
    return out;
#endif
}

}  // namespace linkcolor

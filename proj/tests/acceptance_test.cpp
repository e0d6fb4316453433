// Acceptance suite: one test per criterion, each printing a pass/fail line.
// Tolerances are exact equalities throughout; counts and verdicts are checked
// against brute-force enumeration or number-theoretic cross-formulas.

#include <gtest/gtest.h>

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "linkcolor/coloring.hpp"
#include "linkcolor/invariants.hpp"
#include "linkcolor/verify.hpp"
#include "support/braid.hpp"

using namespace linkcolor;

namespace {

void report(int criterion, const std::string& what) {
    std::cout << (::testing::Test::HasFailure() ? "[FAIL]" : "[PASS]") << " criterion "
              << criterion << ": " << what << std::endl;
}

std::vector<CorpusEntry> corpus() {
    static std::vector<CorpusEntry> entries = [] {
        std::ifstream in(std::string(LINKCOLOR_DATA_DIR) + "/corpus.tsv");
        if (!in) throw std::runtime_error("missing data/corpus.tsv");
        return load_corpus(in);
    }();
    return entries;
}

// every diagram in the corpus, alternative diagrams included
std::vector<std::pair<std::string, Diagram>> corpus_diagrams() {
    std::vector<std::pair<std::string, Diagram>> out;
    for (const CorpusEntry& e : corpus()) {
        out.emplace_back(e.name, Diagram::parse(e.pd));
        if (e.pd_alt) out.emplace_back(e.name + "#alt", Diagram::parse(*e.pd_alt));
    }
    return out;
}

Diagram by_name(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return Diagram::parse(e.pd);
    throw std::runtime_error("fixture not in corpus: " + name);
}

std::multiset<std::string> element_tables(const Diagram& d, const std::vector<Coloring>& cols) {
    std::multiset<std::string> out;
    for (const Coloring& c : cols) {
        std::string s;
        for (int a = 0; a < d.arc_count(); ++a) s += coloring_element(d, c, a).str() + "|";
        out.insert(s);
    }
    return out;
}

long long fox_count_brute(const Diagram& d, long long n) {
    const int arcs = d.arc_count();
    std::vector<int> color(arcs, 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (const Crossing& x : d.crossings()) {
            int lhs = 2 * color[d.over_arc(x)];
            int rhs = color[d.under_in_arc(x)] + color[d.under_out_arc(x)];
            if ((lhs - rhs) % n != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int k = 0;
        while (k < arcs && ++color[k] == static_cast<int>(n)) color[k++] = 0;
        if (k == arcs) break;
    }
    return count;
}

Int formula_count(const DeterminantResult& det, long long n) {
    Int c = 1;
    for (std::size_t i = 0; i < det.free_rank; ++i) c *= n;
    for (const Int& div : det.divisors) c *= gcd(div, Int(n));
    return c;
}

}  // namespace

TEST(Acceptance, C01_OracleEquivalence) {
    for (const auto& [name, d] : corpus_diagrams()) {
        if (d.arc_count() > 8) continue;
        for (long long n = 2; n <= 5; ++n) {
            auto oracle = brute_force_colorings(d, n, OracleOptions{Int(200000000), true});
            auto solver = all_colorings(d, n, Int(200000000));
            EXPECT_EQ(element_tables(d, oracle), element_tables(d, solver))
                << name << " n=" << n;
        }
    }
    report(1, "solver coloring sets equal brute-force sets (arcs <= 8, n in 2..5)");
}

TEST(Acceptance, C02_DeterminantsViaCountFormula) {
    std::map<std::string, Int> expected = {
        {"unknot", 1}, {"hopf", 2}, {"trefoil", 3}, {"t24", 4}, {"figure8", 5}};
    for (const auto& [name, want] : expected) {
        Diagram d = by_name(name);
        DeterminantResult det = determinant(d);
        EXPECT_EQ(det.value, want) << name;
        for (long long n = 3; n <= 12; ++n)
            EXPECT_EQ(formula_count(det, n), fox_count_brute(d, n)) << name << " n=" << n;
    }
    report(2, "determinants 1,2,3,4,5 cross-checked by the coloring-count formula, n in 3..12");
}

TEST(Acceptance, C03_GcdCriterion) {
    for (const auto& [name, d] : corpus_diagrams()) {
        Int det = determinant(d).value;
        for (long long n = 3; n <= 12; ++n) {
            bool criterion = det == 0 || gcd(det, Int(n)) != 1;
            EXPECT_EQ(fox_colorable(d, n).colorable, criterion) << name << " n=" << n;
        }
    }
    report(3, "Fox colorability matches det(L)=0 or gcd(n,det)!=1 for all fixtures, n in 3..12");
}

TEST(Acceptance, C04_TorusFamilyFacts) {
    for (int q = 2; q <= 12; ++q) {
        Diagram d = Diagram::torus_two_strand(q);
        EXPECT_EQ(fox_colorable(d, 3).colorable, q % 3 == 0) << q;
    }
    for (int q : {4, 8, 12}) {
        auto w = exists_surjection(Diagram::torus_two_strand(q), Modulus::finite(3));
        ASSERT_TRUE(w.has_value()) << q;
        EXPECT_TRUE(is_surjective(Diagram::torus_two_strand(q), *w)) << q;
    }
    report(4, "T(2,q): Fox 3-colorable iff 3|q (q in 2..12); D_3 surjection for q=4,8,12");
}

TEST(Acceptance, C05_EvenLinkingEquivalence) {
    VerifyConfig cfg = VerifyConfig::range(3, 10);
    for (const std::string& name :
         {"hopf", "t24", "t26", "t28", "whitehead", "split-trefoil-unknot"}) {
        Diagram d = by_name(name);
        ASSERT_EQ(d.component_count(), 2) << name;
        TheoremCheck chk = check_even_linking_equivalence(d, cfg);
        EXPECT_TRUE(chk.consistent) << name;
        bool even = linking_matrix(d).at(0, 1) % 2 == 0;
        // clauses: (i) even, (ii) two-tone odd n, (iii) two-tone inf,
        // (iv) surjective all n, (v) surjective inf
        EXPECT_EQ(chk.clauses[0].ok, even) << name;
        EXPECT_EQ(chk.clauses[2].ok, even) << name;
        EXPECT_EQ(chk.clauses[4].ok, even) << name;
        EXPECT_EQ(chk.clauses[3].ok, even) << name;  // (iv) for all tested n exactly when (i)
    }
    report(5, "2-component links: clauses (i),(iii),(v) agree and (iv) holds iff (i), n in 3..10");
}

TEST(Acceptance, C06_OddLinkingRestriction) {
    VerifyConfig cfg = VerifyConfig::range(3, 10);
    for (const std::string& name : {"hopf", "t26"}) {
        Diagram d = by_name(name);
        for (long long n : {3, 5, 7, 9})
            EXPECT_FALSE(exists_two_tone(d, Modulus::finite(n)).colorable) << name << " " << n;
        TheoremCheck chk = check_odd_linking_restriction(d, cfg);
        EXPECT_TRUE(chk.consistent) << name;
    }
    report(6, "hopf and T(2,6): no two-tone for odd n; surjections are Fox-type, n in 3..10");
}

TEST(Acceptance, C07_ThreeComponentSurjectivity) {
    VerifyConfig cfg = VerifyConfig::range(3, 10);
    for (const std::string& name : {"borromean", "p222", "p666"}) {
        TheoremCheck chk = check_three_component_surjectivity(by_name(name), cfg);
        EXPECT_TRUE(chk.consistent) << name;
    }
    report(7, "borromean, P(2,2,2), P(6,6,6): surjection witness for every n in 3..10");
}

TEST(Acceptance, C08_PretzelRemarks) {
    Diagram thin = by_name("p3232");
    EXPECT_TRUE(exists_two_tone(thin, Modulus::infinite()).colorable);
    EXPECT_FALSE(exists_two_tone(thin, Modulus::finite(3)).colorable);
    Diagram fat = by_name("p666");
    for (long long m = 4; m <= 10; ++m) {
        TwoToneVerdict v = exists_two_tone(fat, Modulus::finite(m));
        ASSERT_TRUE(v.colorable) << m;
        EXPECT_TRUE(is_two_tone(fat, *v.witness)) << m;
    }
    EXPECT_FALSE(exists_two_tone(fat, Modulus::finite(3)).colorable);
    report(8, "P(3,2,3,2): two-tone inf yes / D_3 no; P(6,6,6): D_m yes for m in 4..10, D_3 no");
}

TEST(Acceptance, C09_StandardFormPropagation) {
    for (const StandardFormSpec& spec :
         {StandardFormSpec{{1, 1}, {2}}, StandardFormSpec{{1, 1, 1, 1}, {2, 2}}}) {
        TheoremCheck chk = check_standard_form_construction(spec, {3, 5, 7});
        EXPECT_TRUE(chk.consistent);
        for (const Flag& f : chk.clauses) EXPECT_TRUE(f.ok) << f.name;
    }
    report(9, "seeded propagation completes two-tone on standard forms, n in {3,5,7}");
}

TEST(Acceptance, C10_DetMod4Law) {
    for (const auto& [name, d] : corpus_diagrams()) {
        if (d.component_count() != 2) continue;
        bool even = linking_matrix(d).at(0, 1) % 2 == 0;
        EXPECT_EQ(mod_floor(determinant(d).value, 4) == 0, even) << name;
    }
    report(10, "2-component fixtures: lk even iff det = 0 mod 4");
}

TEST(Acceptance, C11_InvarianceSuite) {
    VerifyConfig cfg = VerifyConfig::range(3, 8);
    for (const CorpusEntry& e : corpus()) {
        if (!e.pd_alt) continue;
        Diagram d = Diagram::parse(e.pd), alt = Diagram::parse(*e.pd_alt);
        EXPECT_EQ(determinant(d).value, determinant(alt).value) << e.name;
        EXPECT_EQ(linking_matrix(d), linking_matrix(alt)) << e.name;
        for (long long n : cfg.n_values) {
            EXPECT_EQ(fox_colorable(d, n).count, fox_colorable(alt, n).count)
                << e.name << " n=" << n;
            EXPECT_EQ(exists_two_tone(d, Modulus::finite(n)).colorable,
                      exists_two_tone(alt, Modulus::finite(n)).colorable)
                << e.name << " n=" << n;
            EXPECT_EQ(exists_surjection(d, Modulus::finite(n)).has_value(),
                      exists_surjection(alt, Modulus::finite(n)).has_value())
                << e.name << " n=" << n;
            // homomorphism counts are diagram-independent
            EXPECT_EQ(all_colorings(d, n, Int(1000000)).size(),
                      all_colorings(alt, n, Int(1000000)).size())
                << e.name << " n=" << n;
        }
        EXPECT_EQ(exists_two_tone(d, Modulus::infinite()).colorable,
                  exists_two_tone(alt, Modulus::infinite()).colorable)
            << e.name;
    }
    for (const auto& [name, d] : corpus_diagrams()) {
        for (int c = 0; c < d.component_count(); ++c) {
            Diagram rev = d.reverse_component(c);
            for (long long n : {3, 4, 5})
                EXPECT_EQ(exists_two_tone(d, Modulus::finite(n)).colorable,
                          exists_two_tone(rev, Modulus::finite(n)).colorable)
                    << name << " comp " << c << " n=" << n;
            EXPECT_EQ(exists_two_tone(d, Modulus::infinite()).colorable,
                      exists_two_tone(rev, Modulus::infinite()).colorable)
                << name << " comp " << c;
        }
    }
    report(11, "paired diagrams agree on det/linking/verdicts; reversal preserves two-tone");
}

TEST(Acceptance, C12_NegativeControls) {
    // corrupted coloring: perturb one arc of a valid witness
    Diagram t4 = by_name("t24");
    TwoToneVerdict v = exists_two_tone(t4, Modulus::finite(5));
    ASSERT_TRUE(v.colorable);
    ASSERT_TRUE(check_coloring(t4, *v.witness).ok);
    Coloring bad = *v.witness;
    bad.exponents[1] = mod_floor(bad.exponents[1] + 2, 5);
    EXPECT_FALSE(check_coloring(t4, bad).ok);

    // the classic non-generating reflection pair
    Modulus d4 = Modulus::finite(4);
    std::vector<DihedralElement> gens = {DihedralElement::reflection(d4, 0),
                                         DihedralElement::reflection(d4, 2)};
    EXPECT_FALSE(generates_full(gens, d4));
    SubgroupDescriptor s = subgroup_generated(gens, d4);
    EXPECT_EQ(s.kind, SubgroupDescriptor::Kind::dihedral);
    EXPECT_EQ(s.d, 2);
    report(12, "corrupted coloring rejected; {a_0,a_2} in D_4 reported non-generating");
}

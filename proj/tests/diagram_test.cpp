#include "linkcolor/diagram.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "linkcolor/invariants.hpp"
#include "support/braid.hpp"

using namespace linkcolor;

namespace {

int sign_sum(const Diagram& d) {
    int s = 0;
    for (const Crossing& x : d.crossings()) s += x.sign;
    return s;
}

std::multiset<int> sign_multiset(const Diagram& d) {
    std::multiset<int> out;
    for (const Crossing& x : d.crossings()) out.insert(x.sign);
    return out;
}

}  // namespace

TEST(Parse, CrossingFreeCircle) {
    Diagram d = Diagram::parse("O[1]");
    EXPECT_EQ(d.crossings().size(), 0u);
    EXPECT_EQ(d.component_count(), 1);
    EXPECT_EQ(d.arc_count(), 1);
}

TEST(Parse, HopfExample) {
    Diagram d = Diagram::parse("X[1,3,2,4] X[3,1,4,2]");
    EXPECT_EQ(d.crossings().size(), 2u);
    EXPECT_EQ(d.component_count(), 2);
    EXPECT_EQ(d.crossings()[0].sign, d.crossings()[1].sign);
}

TEST(Parse, TrefoilExample) {
    Diagram d = Diagram::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    EXPECT_EQ(d.crossings().size(), 3u);
    EXPECT_EQ(d.component_count(), 1);
    EXPECT_EQ(d.arc_count(), 3);
    EXPECT_EQ(std::abs(sign_sum(d)), 3);  // all crossings same handedness
}

TEST(Parse, Errors) {
    EXPECT_THROW(Diagram::parse("X[1,2,3]"), ParseError);
    EXPECT_THROW(Diagram::parse("Y[1,2,3,4]"), ParseError);
    EXPECT_THROW(Diagram::parse("X[1,2,3,a]"), ParseError);
    EXPECT_THROW(Diagram::parse("O[1,2]"), ParseError);
    EXPECT_THROW(Diagram::parse("X[1,2,3,4]"), ParseError);            // arcs used once
    EXPECT_THROW(Diagram::parse("X[1,1,1,1]"), ParseError);            // arc used 4 times
    EXPECT_THROW(Diagram::parse("X[1,3,2,4] O[3]"), ParseError);       // circle label reused
    EXPECT_THROW(Diagram::parse("X[1,2,3,4] X[1,4,3,2]"), ParseError); // two heads
    try {
        Diagram::parse("X[1,2,3]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("X[1,2,3]"), std::string::npos);
    }
}

TEST(Generate, TorusTwoStrand) {
    for (int q = 1; q <= 9; ++q) {
        Diagram d = Diagram::torus_two_strand(q);
        EXPECT_EQ(d.crossings().size(), static_cast<std::size_t>(q));
        EXPECT_EQ(d.component_count(), q % 2 == 0 ? 2 : 1);
        EXPECT_EQ(std::abs(sign_sum(d)), q);  // uniform handedness
        EXPECT_EQ(d.arc_count(), q == 1 ? 1 : q);
    }
    EXPECT_EQ(std::abs(linking_matrix(Diagram::torus_two_strand(4)).at(0, 1)), 2);
    EXPECT_THROW(Diagram::torus_two_strand(0), std::invalid_argument);
}

TEST(Generate, Pretzel) {
    Diagram p666 = Diagram::pretzel({6, 6, 6});
    EXPECT_EQ(p666.crossings().size(), 18u);
    EXPECT_EQ(p666.component_count(), 3);

    Diagram p1 = Diagram::pretzel({1});
    EXPECT_EQ(p1.crossings().size(), 1u);
    EXPECT_EQ(p1.component_count(), 1);

    Diagram thin = Diagram::pretzel({3, 2, 3, 2});
    EXPECT_EQ(thin.crossings().size(), 10u);
    EXPECT_EQ(thin.component_count(), 2);

    EXPECT_THROW(Diagram::pretzel({}), std::invalid_argument);
    EXPECT_THROW(Diagram::pretzel({2, 0, 2}), std::invalid_argument);
}

TEST(Generate, StandardForm) {
    StandardForm one = generate_standard_form({{1, 1}, {2}});
    EXPECT_EQ(one.diagram.component_count(), 2);
    EXPECT_EQ(one.diagram.crossings().size(), 4u);
    EXPECT_EQ(std::abs(linking_matrix(one.diagram).at(0, 1)), 2);
    EXPECT_GT(one.alpha_label, 0);
    ASSERT_EQ(one.beta_labels.size(), 1u);
    EXPECT_EQ(one.diagram.component_of_label(one.alpha_label), one.l0_component);
    EXPECT_NE(one.diagram.component_of_label(one.beta_labels[0]), one.l0_component);

    StandardForm none = generate_standard_form({{}, {}});
    EXPECT_EQ(none.diagram.serialize(), "O[1]");

    StandardForm two = generate_standard_form({{1, 1, 1, 1}, {2, 2}});
    EXPECT_EQ(two.diagram.component_count(), 3);

    EXPECT_THROW(generate_standard_form({{1}, {1}}), std::invalid_argument);
    EXPECT_THROW(generate_standard_form({{1, 2}, {2}}), std::invalid_argument);  // odd twist sum
    EXPECT_THROW(generate_standard_form({{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST(Sublink, HopfToUnknot) {
    Diagram hopf = Diagram::torus_two_strand(2);
    for (int keep : {0, 1}) {
        Diagram sub = hopf.sublink({keep});
        EXPECT_EQ(sub.crossings().size(), 0u);
        EXPECT_EQ(sub.component_count(), 1);
        EXPECT_EQ(sub.serialize(), "O[1]");
    }
}

TEST(Sublink, PretzelPair) {
    Diagram p = Diagram::pretzel({6, 6, 6});
    Diagram sub = p.sublink({0, 1});
    EXPECT_EQ(sub.component_count(), 2);
    // each component spans two twist regions, so removing one leaves only the
    // 6 crossings of the kept pair's shared region
    EXPECT_EQ(sub.crossings().size(), 6u);
    EXPECT_EQ(std::abs(linking_matrix(sub).at(0, 1)), 3);
}

TEST(Sublink, IdentityAndNesting) {
    Diagram p = Diagram::pretzel({2, 2, 2});
    EXPECT_EQ(p.sublink({0, 1, 2}), p);
    // sublink(sublink(d,{0,1}), {0}) == sublink(d,{0}) (component 0 keeps rank)
    EXPECT_EQ(p.sublink({0, 1}).sublink({0}), p.sublink({0}));
    EXPECT_EQ(p.sublink({0, 2}).sublink({1}), p.sublink({2}));
}

TEST(Sublink, SplitDiagram) {
    Diagram d = Diagram::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O[7]");
    EXPECT_EQ(d.component_count(), 2);
    Diagram knot = d.sublink({0});
    EXPECT_EQ(knot.crossings().size(), 3u);
    Diagram circle = d.sublink({1});
    EXPECT_EQ(circle.serialize(), "O[1]");
}

TEST(Reverse, LinkingNegates) {
    Diagram hopf = Diagram::torus_two_strand(2);
    long long lk = linking_matrix(hopf).at(0, 1);
    Diagram rev = hopf.reverse_component(0);
    EXPECT_EQ(linking_matrix(rev).at(0, 1), -lk);
    EXPECT_EQ(rev.crossings().size(), hopf.crossings().size());
    EXPECT_EQ(rev.arc_count(), hopf.arc_count());
}

TEST(Reverse, Involution) {
    for (const Diagram& d : {Diagram::torus_two_strand(4), Diagram::pretzel({3, 2, 3, 2}),
                             Diagram::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")}) {
        for (int c = 0; c < d.component_count(); ++c)
            EXPECT_EQ(d.reverse_component(c).reverse_component(c), d);
    }
}

TEST(Reverse, KnotSignsUnchanged) {
    Diagram tre = Diagram::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    Diagram rev = tre.reverse_component(0);
    EXPECT_EQ(sign_multiset(rev), sign_multiset(tre));
}

TEST(RoundTrip, SerializeParse) {
    std::vector<Diagram> fixtures = {
        Diagram::torus_two_strand(5),
        Diagram::pretzel({6, 6, 6}),
        Diagram::pretzel({-2, 3, 7}),
        generate_standard_form({{1, 1, 1, 1}, {2, 2}}).diagram,
        Diagram::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O[7]"),
        Diagram::parse(testsupport::closed_braid_pd(3, {1, -2, 1, -2, 1})),
    };
    for (const Diagram& d : fixtures) {
        Diagram again = Diagram::parse(d.serialize());
        EXPECT_EQ(again, d);
        EXPECT_EQ(again.serialize(), d.serialize());
    }
    // parse-then-serialize is idempotent even when the input token order is not canonical
    std::string text = "O[7] X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    std::string once = Diagram::parse(text).serialize();
    EXPECT_EQ(Diagram::parse(once).serialize(), once);
}

TEST(Structure, InterComponentCrossingsEven) {
    for (const Diagram& d : {Diagram::torus_two_strand(6), Diagram::pretzel({2, 2, 2}),
                             Diagram::pretzel({3, 2, 3, 2}),
                             Diagram::parse(testsupport::closed_braid_pd(3, {1, -2, 1, -2, 1}))}) {
        for (int i = 0; i < d.component_count(); ++i)
            for (int j = 0; j < d.component_count(); ++j) {
                if (i == j) continue;
                int count = 0;
                for (const Crossing& x : d.crossings()) {
                    int cu = d.component_of_label(x.under_in());
                    int co = d.component_of_label(x.over_in());
                    if ((cu == i && co == j) || (cu == j && co == i)) ++count;
                }
                EXPECT_EQ(count % 2, 0);
            }
    }
}

TEST(RoundTrip, RandomBraidClosures) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> strands(2, 4), len(3, 10);
    int done = 0;
    while (done < 60) {
        int s = strands(rng);
        std::uniform_int_distribution<int> letter(1, s - 1);
        std::vector<int> word;
        for (int i = len(rng); i > 0; --i) word.push_back(letter(rng) * (rng() % 2 ? 1 : -1));
        std::string pd;
        try {
            pd = testsupport::closed_braid_pd(s, word);
        } catch (const std::invalid_argument&) {
            continue;  // a strand stayed over everywhere; not expressible here
        }
        ++done;
        Diagram d = Diagram::parse(pd);
        EXPECT_EQ(Diagram::parse(d.serialize()), d);
        linking_matrix(d);  // integrality holds on planar inputs
        for (int c = 0; c < d.component_count(); ++c)
            EXPECT_EQ(d.reverse_component(c).reverse_component(c), d);
        std::vector<int> all(d.component_count());
        for (int c = 0; c < d.component_count(); ++c) all[c] = c;
        EXPECT_EQ(d.sublink(all), d);
    }
}

TEST(Structure, ArcMerging) {
    // over slots of every crossing share a merged arc
    Diagram d = Diagram::pretzel({3, 2, 3, 2});
    for (const Crossing& x : d.crossings()) {
        EXPECT_EQ(d.arc_of_label(x.slots[1]), d.arc_of_label(x.slots[3]));
        EXPECT_EQ(d.arc_of_label(x.under_in()), d.under_in_arc(x));
    }
    EXPECT_EQ(Diagram::parse("X[1,3,2,4] X[3,1,4,2]").arc_count(), 2);
    EXPECT_EQ(Diagram::torus_two_strand(4).arc_count(), 4);
}

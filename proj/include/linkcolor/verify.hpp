#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linkcolor/coloring.hpp"
#include "linkcolor/diagram.hpp"
#include "linkcolor/invariants.hpp"

namespace linkcolor {

struct VerifyConfig {
    std::vector<long long> n_values;  // dihedral degrees to test, each >= 3
    Int enumeration_cap = 1000000;
    bool witnesses = true;

    static VerifyConfig range(long long lo, long long hi);
    SearchOptions search() const { return SearchOptions{enumeration_cap}; }
};

struct Flag {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct PerDegree {
    bool fox = false;
    Int fox_count;
    bool two_tone = false;
    bool surjective = false;
    std::string two_tone_witness;
    std::string surjection_witness;
    std::string error;  // capacity errors annotate the cell and fail the row
};

struct ClassificationReport {
    std::string name;
    int components = 0;
    int crossings = 0;
    int arcs = 0;
    LinkingMatrix lk{0};
    DeterminantResult det;
    std::vector<Int> component_dets;
    std::vector<std::pair<long long, PerDegree>> per_n;
    bool two_tone_inf = false;
    bool surjective_inf = false;
    std::string two_tone_inf_witness;
    std::string surjection_inf_witness;
    std::vector<Flag> flags;
    bool consistent = true;
};

ClassificationReport classify(const Diagram& d, const VerifyConfig& cfg,
                              const std::string& name = "");

// One structural law instantiated on one input; clauses list the individual
// verdicts and `consistent` says whether the law's implication pattern holds.
struct TheoremCheck {
    std::string id;
    std::vector<Flag> clauses;
    bool consistent = true;
    bool range_limited = false;  // an existential clause failed only over the tested range
};

// 2-component links: even linking <=> two-tone colorable for some odd degree
// <=> two-tone over the infinite dihedral group <=> surjections for every
// degree <=> surjection onto the infinite dihedral group.
TheoremCheck check_even_linking_equivalence(const Diagram& d, const VerifyConfig& cfg);

// 2-component links with odd linking: no two-tone coloring for odd degrees,
// and every surjective coloring is induced by a Fox coloring.
TheoremCheck check_odd_linking_restriction(const Diagram& d, const VerifyConfig& cfg);

// Links with >= 3 components surject onto every dihedral group.
TheoremCheck check_three_component_surjectivity(const Diagram& d, const VerifyConfig& cfg);

// 2-component links: even linking <=> determinant divisible by 4.
TheoremCheck check_det_mod4_law(const Diagram& d);

// A surjection forces a two-tone-colorable or Fox-colorable sublink.
TheoremCheck check_surjection_sublink_law(const Diagram& d, const VerifyConfig& cfg);

// For odd m: P(m,2,m,2) is two-tone over the infinite group but not over D_m;
// P(2m,2m,2m) is not two-tone over D_m yet surjects for every sampled degree.
TheoremCheck check_pretzel_families(const std::vector<long long>& odd_m, const VerifyConfig& cfg);

// Seeded propagation on generated standard forms completes to a two-tone
// coloring with the round component reflection-toned, for each odd degree.
TheoremCheck check_standard_form_construction(const StandardFormSpec& spec,
                                              const std::vector<long long>& odd_n);

struct CorpusEntry {
    std::string name;
    std::string pd;
    std::optional<std::string> pd_alt;
    int line = 0;
};

std::vector<CorpusEntry> load_corpus(std::istream& in);

struct CorpusReport {
    struct Row {
        CorpusEntry entry;
        ClassificationReport report;
        std::vector<Flag> extra;  // alternative-diagram agreement etc.
        bool ok = true;
    };
    std::vector<Row> rows;
    bool ok = true;
};

CorpusReport run_corpus(std::istream& corpus, const VerifyConfig& cfg);
CorpusReport run_corpus_file(const std::string& path, const VerifyConfig& cfg);

std::string corpus_csv(const CorpusReport& rep, const VerifyConfig& cfg);
std::string classification_table(const ClassificationReport& rep);
std::string classification_record(const ClassificationReport& rep);  // one-line JSON

}  // namespace linkcolor

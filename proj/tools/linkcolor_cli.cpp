// linkcolor: Fox and dihedral coloring decisions for link diagrams.
//
// Subcommands compose over standard streams: `gen` writes a diagram record,
// `parse`/`invariants`/`fox`/`dihedral`/`classify` read one from stdin.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linkcolor/coloring.hpp"
#include "linkcolor/diagram.hpp"
#include "linkcolor/invariants.hpp"
#include "linkcolor/verify.hpp"

using namespace linkcolor;

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Int default_cap() {
    if (const char* env = std::getenv("LINKCOLOR_ENUM_CAP")) return Int(env);
    return Int(1000000);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(std::stoi(field));
    return out;
}

std::pair<long long, long long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long long v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

struct DegreeOption {
    long long n = 0;
    bool inf = false;
    Modulus modulus() const { return inf ? Modulus::infinite() : Modulus::finite(n); }
};

int run(int argc, char** argv) {
    CLI::App app{"Fox and dihedral coloring decisions for link diagrams"};
    app.require_subcommand(1);
    std::string input;  // diagram source for stream-reading subcommands

    auto* parse_cmd = app.add_subcommand("parse", "validate a diagram and re-serialize it");
    parse_cmd->add_option("file", input, "diagram file (default stdin)");

    auto* gen = app.add_subcommand("gen", "generate a diagram");
    gen->require_subcommand(1);
    int torus_q = 0;
    auto* gen_torus = gen->add_subcommand("torus2", "closed 2-strand torus braid");
    gen_torus->add_option("q", torus_q, "number of crossings")->required();
    std::string pretzel_spec;
    auto* gen_pretzel = gen->add_subcommand("pretzel", "pretzel diagram");
    gen_pretzel->add_option("twists", pretzel_spec, "signed half-twist counts, e.g. 6,6,6")
        ->required();
    std::string standard_spec;
    auto* gen_standard =
        gen->add_subcommand("standard", "round component with twist boxes against a closure");
    gen_standard
        ->add_option("spec", standard_spec,
                     "box twists / passes per closure component, e.g. 1,1/2 or 1,1,1,1/2,2")
        ->required();

    auto* inv = app.add_subcommand("invariants", "linking matrix and determinant");
    std::string format = "table";
    inv->add_option("--format", format, "table or record");
    inv->add_option("--input", input, "diagram file (default stdin)");

    auto* fox = app.add_subcommand("fox", "Fox colorability");
    long long fox_n = 0;
    fox->add_option("--n", fox_n, "number of colors (>= 3)")->required();
    fox->add_option("--input", input, "diagram file (default stdin)");

    auto* dihedral_cmd = app.add_subcommand("dihedral", "dihedral coloring spaces and searches");
    DegreeOption deg;
    dihedral_cmd->add_option("--n", deg.n, "dihedral degree (>= 3)");
    dihedral_cmd->add_flag("--inf", deg.inf, "use the infinite dihedral group");
    bool want_two_tone = false, want_surjective = false, emit_witness = false;
    dihedral_cmd->add_flag("--two-tone", want_two_tone, "search for a two-tone coloring");
    dihedral_cmd->add_flag("--surjective", want_surjective, "search for a surjective coloring");
    dihedral_cmd->add_flag("--witness", emit_witness, "print the witness coloring in full");
    dihedral_cmd->add_option("--input", input, "diagram file (default stdin)");

    auto* classify_cmd = app.add_subcommand("classify", "full per-degree classification");
    std::string n_range = "3..6";
    classify_cmd->add_option("--n-range", n_range, "degree range, e.g. 3..10");
    classify_cmd->add_option("--format", format, "table or record");
    classify_cmd->add_option("--input", input, "diagram file (default stdin)");
    std::string link_name;
    classify_cmd->add_option("--name", link_name, "link name for the report");

    auto* verify_cmd = app.add_subcommand("verify", "classify and cross-check a corpus");
    std::string corpus_path;
    verify_cmd->add_option("--corpus", corpus_path, "fixture file: name<TAB>pd[<TAB>pd_alt]");
    verify_cmd->add_option("--n-range", n_range, "degree range, e.g. 3..6");
    verify_cmd->add_option("--format", format, "csv or record");
    bool no_witness = false;
    verify_cmd->add_flag("--no-witnesses", no_witness, "omit witness digests");
    std::string config_path;
    verify_cmd->add_option("--config", config_path,
                           "key=value file with corpus, n_range, cap, witnesses");

    Int cap = default_cap();
    std::string cap_text;
    app.add_option("--cap", cap_text, "enumeration cap (default 10^6, env LINKCOLOR_ENUM_CAP)");
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (!cap_text.empty()) cap = Int(cap_text);

    if (parse_cmd->parsed()) {
        Diagram d = Diagram::parse(slurp(input));
        std::cout << d.serialize() << '\n';
        std::cerr << "crossings: " << d.crossings().size() << "  arcs: " << d.arc_count()
                  << "  components: " << d.component_count() << '\n';
        return 0;
    }
    if (gen->parsed()) {
        Diagram d;
        if (gen_torus->parsed()) {
            d = Diagram::torus_two_strand(torus_q);
        } else if (gen_pretzel->parsed()) {
            d = Diagram::pretzel(parse_int_list(pretzel_spec));
        } else {
            auto slash = standard_spec.find('/');
            StandardFormSpec spec;
            spec.box_twists = parse_int_list(standard_spec.substr(0, slash));
            if (slash != std::string::npos)
                spec.component_passes = parse_int_list(standard_spec.substr(slash + 1));
            StandardForm sf = generate_standard_form(spec);
            std::cerr << "alpha arc: " << sf.alpha_label << "  beta arcs:";
            for (int b : sf.beta_labels) std::cerr << ' ' << b;
            std::cerr << '\n';
            d = sf.diagram;
        }
        std::cout << d.serialize() << '\n';
        return 0;
    }
    if (inv->parsed()) {
        Diagram d = Diagram::parse(slurp(input));
        LinkingMatrix lk = linking_matrix(d);
        DeterminantResult det = determinant(d);
        if (format == "record") {
            VerifyConfig cfg;  // no degrees: invariants only
            cfg.enumeration_cap = cap;
            std::cout << classification_record(classify(d, cfg)) << '\n';
        } else {
            std::cout << "components: " << d.component_count() << '\n';
            std::cout << "linking matrix:\n";
            for (int i = 0; i < lk.components(); ++i) {
                for (int j = 0; j < lk.components(); ++j) std::cout << ' ' << lk.at(i, j);
                std::cout << '\n';
            }
            std::cout << "det: " << det.value.str() << "  (free rank " << det.free_rank
                      << "; divisors";
            for (const Int& v : det.divisors) std::cout << ' ' << v.str();
            std::cout << ")\n";
        }
        return 0;
    }
    if (fox->parsed()) {
        Diagram d = Diagram::parse(slurp(input));
        FoxResult res = fox_colorable(d, fox_n);
        std::cout << (res.colorable ? "colorable" : "not colorable") << "  count "
                  << res.count.str() << '\n';
        return 0;
    }
    if (dihedral_cmd->parsed()) {
        if (!deg.inf && deg.n < 3)
            throw CLI::ValidationError("dihedral", "need --n >= 3 or --inf");
        Diagram d = Diagram::parse(slurp(input));
        SearchOptions opt{cap};
        if (want_two_tone) {
            TwoToneVerdict v = exists_two_tone(d, deg.modulus(), opt);
            if (v.colorable) {
                std::cout << "two-tone colorable\nwitness: " << coloring_digest(*v.witness)
                          << '\n';
                if (emit_witness) std::cout << coloring_text(d, *v.witness);
            } else {
                std::cout << "not colorable" << (v.obstruction.empty() ? "" : ": " + v.obstruction)
                          << '\n';
            }
        } else if (want_surjective) {
            auto w = exists_surjection(d, deg.modulus(), opt);
            if (w) {
                std::cout << "surjective coloring exists\nwitness: " << coloring_digest(*w)
                          << '\n';
                if (emit_witness) std::cout << coloring_text(d, *w);
            } else {
                std::cout << "no surjective coloring\n";
            }
        } else {
            if (deg.inf) {
                for (unsigned long long mask = 0; mask < (1ull << d.component_count()); ++mask) {
                    ToneAssignment tone =
                        ToneAssignment::from_mask(d.component_count(), mask);
                    ColoringSpace sp = coloring_space(d, tone, Modulus::infinite());
                    std::cout << "tone " << tone.str() << ": lattice rank "
                              << sp.lattice.size() << '\n';
                }
            } else {
                Int total = 0;
                for (unsigned long long mask = 0; mask < (1ull << d.component_count()); ++mask) {
                    ToneAssignment tone =
                        ToneAssignment::from_mask(d.component_count(), mask);
                    ColoringSpace sp = coloring_space(d, tone, deg.modulus());
                    std::cout << "tone " << tone.str() << ": " << sp.module.count.str()
                              << " colorings\n";
                    total += sp.module.count;
                }
                std::cout << "total: " << total.str() << '\n';
            }
        }
        return 0;
    }
    if (classify_cmd->parsed()) {
        Diagram d = Diagram::parse(slurp(input));
        auto [lo, hi] = parse_range(n_range);
        VerifyConfig cfg = VerifyConfig::range(lo, hi);
        cfg.enumeration_cap = cap;
        ClassificationReport rep = classify(d, cfg, link_name);
        std::cout << (format == "record" ? classification_record(rep) + "\n"
                                         : classification_table(rep));
        return rep.consistent ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
        if (!config_path.empty()) {
            std::ifstream conf(config_path);
            if (!conf) throw ParseError("cannot open config file: " + config_path);
            std::string line;
            int lineno = 0;
            while (std::getline(conf, line)) {
                ++lineno;
                auto hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                auto eq = line.find('=');
                if (line.find_first_not_of(" \t") == std::string::npos) continue;
                if (eq == std::string::npos)
                    throw ParseError("config line " + std::to_string(lineno) +
                                     ": expected key=value");
                auto trim = [](std::string s) {
                    s.erase(0, s.find_first_not_of(" \t"));
                    s.erase(s.find_last_not_of(" \t") + 1);
                    return s;
                };
                std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
                if (key == "corpus" && corpus_path.empty())
                    corpus_path = value;
                else if (key == "n_range" && verify_cmd->count("--n-range") == 0)
                    n_range = value;
                else if (key == "cap" && cap_text.empty())
                    cap = Int(value);
                else if (key == "witnesses")
                    no_witness = value == "false" || value == "0";
                else if (key != "corpus" && key != "n_range" && key != "cap")
                    throw ParseError("config line " + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
            }
        }
        if (corpus_path.empty())
            throw CLI::ValidationError("verify", "need --corpus or a config file naming one");
        auto [lo, hi] = parse_range(n_range);
        VerifyConfig cfg = VerifyConfig::range(lo, hi);
        cfg.enumeration_cap = cap;
        cfg.witnesses = !no_witness;
        CorpusReport rep = run_corpus_file(corpus_path, cfg);
        if (format == "record") {
            for (const auto& row : rep.rows)
                std::cout << classification_record(row.report) << '\n';
        } else {
            std::cout << corpus_csv(rep, cfg);
        }
        if (!rep.ok) {
            for (const auto& row : rep.rows)
                if (!row.ok) std::cerr << "inconsistent: " << row.entry.name << '\n';
            return 1;
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

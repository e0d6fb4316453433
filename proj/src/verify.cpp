#include "linkcolor/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace linkcolor {

VerifyConfig VerifyConfig::range(long long lo, long long hi) {
    VerifyConfig cfg;
    if (lo < 3 || hi < lo) throw std::invalid_argument("degree range must start at 3");
    for (long long n = lo; n <= hi; ++n) cfg.n_values.push_back(n);
    return cfg;
}

namespace {

bool validate_two_tone(const Diagram& d, const Coloring& c) {
    return check_coloring(d, c).ok && is_two_tone(d, c);
}
bool validate_surjection(const Diagram& d, const Coloring& c) {
    return check_coloring(d, c).ok && is_surjective(d, c);
}

void add_flag(std::vector<Flag>& flags, const std::string& name, bool ok,
              const std::string& detail = "") {
    flags.push_back(Flag{name, ok, ok ? "" : detail});
}

}  // namespace

ClassificationReport classify(const Diagram& d, const VerifyConfig& cfg, const std::string& name) {
    ClassificationReport rep;
    rep.name = name;
    rep.components = d.component_count();
    rep.crossings = static_cast<int>(d.crossings().size());
    rep.arcs = d.arc_count();
    rep.lk = linking_matrix(d);
    rep.det = determinant(d);
    for (int c = 0; c < d.component_count(); ++c)
        rep.component_dets.push_back(determinant(d.sublink({c})).value);

    bool witnesses_ok = true;
    for (long long n : cfg.n_values) {
        PerDegree cell;
        try {
            FoxResult fox = fox_colorable(d, n);
            cell.fox = fox.colorable;
            cell.fox_count = fox.count;
            TwoToneVerdict tt = exists_two_tone(d, Modulus::finite(n), cfg.search());
            cell.two_tone = tt.colorable;
            if (tt.witness) {
                witnesses_ok = witnesses_ok && validate_two_tone(d, *tt.witness);
                if (cfg.witnesses) cell.two_tone_witness = coloring_digest(*tt.witness);
            }
            auto surj = exists_surjection(d, Modulus::finite(n), cfg.search());
            cell.surjective = surj.has_value();
            if (surj) {
                witnesses_ok = witnesses_ok && validate_surjection(d, *surj);
                if (cfg.witnesses) cell.surjection_witness = coloring_digest(*surj);
            }
        } catch (const CapacityError& e) {
            cell.error = e.what();
        }
        rep.per_n.emplace_back(n, std::move(cell));
    }
    {
        TwoToneVerdict tt = exists_two_tone(d, Modulus::infinite(), cfg.search());
        rep.two_tone_inf = tt.colorable;
        if (tt.witness) {
            witnesses_ok = witnesses_ok && validate_two_tone(d, *tt.witness);
            if (cfg.witnesses) rep.two_tone_inf_witness = coloring_digest(*tt.witness);
        }
        auto surj = exists_surjection(d, Modulus::infinite(), cfg.search());
        rep.surjective_inf = surj.has_value();
        if (surj) {
            witnesses_ok = witnesses_ok && validate_surjection(d, *surj);
            if (cfg.witnesses) rep.surjection_inf_witness = coloring_digest(*surj);
        }
    }

    add_flag(rep.flags, "witnesses_valid", witnesses_ok, "a witness failed re-validation");
    bool no_capacity = std::all_of(rep.per_n.begin(), rep.per_n.end(),
                                   [](const auto& p) { return p.second.error.empty(); });
    add_flag(rep.flags, "all_cells_computed", no_capacity, "capacity error in a cell");

    if (rep.components == 2) {
        TheoremCheck m4 = check_det_mod4_law(d);
        add_flag(rep.flags, m4.id, m4.consistent, "determinant mod 4 mismatch");
    }
    if (no_capacity && !cfg.n_values.empty()) {
        if (rep.components == 2) {
            TheoremCheck t1 = check_even_linking_equivalence(d, cfg);
            add_flag(rep.flags, t1.id, t1.consistent, "equivalence pattern violated");
            if (rep.lk.at(0, 1) % 2 != 0) {
                TheoremCheck t2 = check_odd_linking_restriction(d, cfg);
                add_flag(rep.flags, t2.id, t2.consistent, "odd-linking restriction violated");
            }
        }
        if (rep.components >= 3) {
            TheoremCheck t3 = check_three_component_surjectivity(d, cfg);
            add_flag(rep.flags, t3.id, t3.consistent, "missing surjection");
        }
        TheoremCheck cor = check_surjection_sublink_law(d, cfg);
        add_flag(rep.flags, cor.id, cor.consistent, "surjection without colorable sublink");
    }

    rep.consistent = std::all_of(rep.flags.begin(), rep.flags.end(),
                                 [](const Flag& f) { return f.ok; });
    return rep;
}

// ---------------------------------------------------------------------------
// Structural laws

TheoremCheck check_even_linking_equivalence(const Diagram& d, const VerifyConfig& cfg) {
    if (d.component_count() != 2)
        throw std::invalid_argument("even-linking equivalence needs a 2-component link");
    TheoremCheck chk;
    chk.id = "even_linking_equivalence";

    bool even = linking_matrix(d).at(0, 1) % 2 == 0;
    bool tt_odd_n = false;
    for (long long n : cfg.n_values)
        if (n % 2 == 1 && exists_two_tone(d, Modulus::finite(n), cfg.search()).colorable) {
            tt_odd_n = true;
            break;
        }
    bool tt_inf = exists_two_tone(d, Modulus::infinite(), cfg.search()).colorable;
    bool surj_all = true;
    for (long long n : cfg.n_values)
        if (!exists_surjection(d, Modulus::finite(n), cfg.search())) {
            surj_all = false;
            break;
        }
    bool surj_inf = exists_surjection(d, Modulus::infinite(), cfg.search()).has_value();

    chk.clauses = {Flag{"even_linking", even},
                   Flag{"two_tone_some_odd_degree", tt_odd_n},
                   Flag{"two_tone_infinite", tt_inf},
                   Flag{"surjective_every_degree", surj_all},
                   Flag{"surjective_infinite", surj_inf}};
    chk.consistent = (even == tt_inf) && (even == surj_all) && (even == surj_inf);
    if (tt_odd_n != even) {
        if (tt_odd_n)
            chk.consistent = false;  // two-tone for odd degree forces even linking
        else
            chk.range_limited = true;  // existential clause not witnessed in range
    }
    return chk;
}

TheoremCheck check_odd_linking_restriction(const Diagram& d, const VerifyConfig& cfg) {
    if (d.component_count() != 2 || linking_matrix(d).at(0, 1) % 2 == 0)
        throw std::invalid_argument("odd-linking restriction needs odd pairwise linking");
    TheoremCheck chk;
    chk.id = "odd_linking_restriction";

    bool no_tt = true;
    for (long long n : cfg.n_values)
        if (n % 2 == 1 && exists_two_tone(d, Modulus::finite(n), cfg.search()).colorable) {
            no_tt = false;
            break;
        }
    chk.clauses.push_back(Flag{"no_two_tone_odd_degree", no_tt});

    bool fox_only = true;
    for (long long n : cfg.n_values) {
        for (const Coloring& c : all_colorings(d, n, cfg.enumeration_cap))
            if (is_surjective(d, c) && !is_fox_type(d, c)) {
                fox_only = false;
                break;
            }
        if (!fox_only) break;
    }
    chk.clauses.push_back(Flag{"surjections_fox_type", fox_only});
    chk.consistent = no_tt && fox_only;
    return chk;
}

TheoremCheck check_three_component_surjectivity(const Diagram& d, const VerifyConfig& cfg) {
    if (d.component_count() < 3)
        throw std::invalid_argument("needs at least 3 components");
    TheoremCheck chk;
    chk.id = "three_component_surjectivity";
    for (long long n : cfg.n_values) {
        auto w = exists_surjection(d, Modulus::finite(n), cfg.search());
        bool ok = w && validate_surjection(d, *w);
        chk.clauses.push_back(Flag{"surjective_degree_" + std::to_string(n), ok});
        chk.consistent = chk.consistent && ok;
    }
    return chk;
}

TheoremCheck check_det_mod4_law(const Diagram& d) {
    if (d.component_count() != 2)
        throw std::invalid_argument("determinant mod 4 law needs a 2-component link");
    TheoremCheck chk;
    chk.id = "det_mod4_law";
    bool even = linking_matrix(d).at(0, 1) % 2 == 0;
    bool det0mod4 = mod_floor(determinant(d).value, 4) == 0;
    chk.clauses = {Flag{"even_linking", even}, Flag{"det_divisible_by_4", det0mod4}};
    chk.consistent = even == det0mod4;
    return chk;
}

TheoremCheck check_surjection_sublink_law(const Diagram& d, const VerifyConfig& cfg) {
    TheoremCheck chk;
    chk.id = "surjection_sublink_law";
    const int c = d.component_count();
    if (c > 16) throw CapacityError("too many components for sublink enumeration");
    for (long long n : cfg.n_values) {
        if (!exists_surjection(d, Modulus::finite(n), cfg.search())) continue;
        bool found = false;
        for (unsigned mask = 1; mask < (1u << c) && !found; ++mask) {
            std::vector<ComponentId> keep;
            for (int i = 0; i < c; ++i)
                if (mask & (1u << i)) keep.push_back(i);
            Diagram sub = d.sublink(keep);
            if (fox_colorable(sub, n).colorable) found = true;
            else if (sub.component_count() >= 2 &&
                     exists_two_tone(sub, Modulus::finite(n), cfg.search()).colorable)
                found = true;
        }
        chk.clauses.push_back(Flag{"colorable_sublink_degree_" + std::to_string(n), found});
        chk.consistent = chk.consistent && found;
    }
    return chk;
}

TheoremCheck check_pretzel_families(const std::vector<long long>& odd_m,
                                    const VerifyConfig& cfg) {
    TheoremCheck chk;
    chk.id = "pretzel_families";
    for (long long m : odd_m) {
        if (m < 3 || m % 2 == 0) throw std::invalid_argument("pretzel families need odd m >= 3");
        int mi = static_cast<int>(m);
        Diagram thin = Diagram::pretzel({mi, 2, mi, 2});
        bool tt_inf = exists_two_tone(thin, Modulus::infinite(), cfg.search()).colorable;
        bool tt_m = exists_two_tone(thin, Modulus::finite(m), cfg.search()).colorable;
        chk.clauses.push_back(Flag{"P(m,2,m,2)_two_tone_infinite_m" + std::to_string(m), tt_inf});
        chk.clauses.push_back(Flag{"P(m,2,m,2)_no_two_tone_m" + std::to_string(m), !tt_m});

        Diagram fat = Diagram::pretzel({2 * mi, 2 * mi, 2 * mi});
        bool fat_tt = exists_two_tone(fat, Modulus::finite(m), cfg.search()).colorable;
        chk.clauses.push_back(Flag{"P(2m,2m,2m)_no_two_tone_m" + std::to_string(m), !fat_tt});
        bool surj_all = true;
        for (long long n : cfg.n_values)
            if (!exists_surjection(fat, Modulus::finite(n), cfg.search())) {
                surj_all = false;
                break;
            }
        chk.clauses.push_back(Flag{"P(2m,2m,2m)_surjective_m" + std::to_string(m), surj_all});
        chk.consistent = chk.consistent && tt_inf && !tt_m && !fat_tt && surj_all;
    }
    return chk;
}

TheoremCheck check_standard_form_construction(const StandardFormSpec& spec,
                                              const std::vector<long long>& odd_n) {
    TheoremCheck chk;
    chk.id = "standard_form_construction";
    StandardForm sf = generate_standard_form(spec);
    for (long long n : odd_n) {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("standard form check needs odd n");
        Modulus mod = Modulus::finite(n);
        std::vector<std::pair<int, DihedralElement>> seeds;
        seeds.emplace_back(sf.alpha_label, DihedralElement::reflection(mod, 0));
        for (int beta : sf.beta_labels)
            seeds.emplace_back(beta, DihedralElement::rotation(mod, 1));
        PropagateResult res = propagate(sf.diagram, mod, seeds);
        bool ok = false;
        if (const Coloring* col = std::get_if<Coloring>(&res))
            ok = validate_two_tone(sf.diagram, *col) &&
                 col->tone[sf.l0_component] == Tone::R;
        chk.clauses.push_back(Flag{"completes_degree_" + std::to_string(n), ok});
        chk.consistent = chk.consistent && ok;
    }
    return chk;
}

// ---------------------------------------------------------------------------
// Corpus harness

std::vector<CorpusEntry> load_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, '\t')) fields.push_back(field);
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty())
            throw ParseError("corpus line " + std::to_string(lineno) +
                             ": expected name<TAB>pd[<TAB>pd_alt]");
        CorpusEntry e;
        e.name = fields[0];
        e.pd = fields[1];
        if (fields.size() == 3 && !fields[2].empty()) e.pd_alt = fields[2];
        e.line = lineno;
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

CorpusReport::Row corpus_row(const CorpusEntry& entry, const VerifyConfig& cfg) {
    CorpusReport::Row row;
    row.entry = entry;
    Diagram d;
    try {
        d = Diagram::parse(entry.pd);
    } catch (const ParseError& e) {
        throw ParseError("corpus line " + std::to_string(entry.line) + " (" + entry.name +
                         "): " + e.what());
    }
    row.report = classify(d, cfg, entry.name);
    row.ok = row.report.consistent;

    if (entry.pd_alt) {
        Diagram alt;
        try {
            alt = Diagram::parse(*entry.pd_alt);
        } catch (const ParseError& e) {
            throw ParseError("corpus line " + std::to_string(entry.line) + " (" + entry.name +
                             "): alternative diagram: " + e.what());
        }
        ClassificationReport other = classify(alt, cfg, entry.name + "#alt");
        bool same = other.components == row.report.components &&
                    other.det.value == row.report.det.value && other.lk == row.report.lk &&
                    other.two_tone_inf == row.report.two_tone_inf &&
                    other.surjective_inf == row.report.surjective_inf &&
                    other.consistent;
        for (std::size_t i = 0; same && i < other.per_n.size(); ++i) {
            const PerDegree &a = row.report.per_n[i].second, &b = other.per_n[i].second;
            same = a.fox == b.fox && a.fox_count == b.fox_count && a.two_tone == b.two_tone &&
                   a.surjective == b.surjective;
        }
        row.extra.push_back(Flag{"alternative_diagram_agreement", same,
                                 same ? "" : "verdicts differ between paired diagrams"});
        row.ok = row.ok && same;
    }
    return row;
}

}  // namespace

CorpusReport run_corpus(std::istream& corpus, const VerifyConfig& cfg) {
    std::vector<CorpusEntry> entries = load_corpus(corpus);
    CorpusReport rep;
    rep.rows.resize(entries.size());

    std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
        try {
            rep.rows[i] = corpus_row(entries[i], cfg);
        } catch (...) {
#pragma omp critical
            if (!fail) fail = std::current_exception();
        }
    }
    if (fail) std::rethrow_exception(fail);

    for (const auto& row : rep.rows) rep.ok = rep.ok && row.ok;
    return rep;
}

CorpusReport run_corpus_file(const std::string& path, const VerifyConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file: " + path);
    return run_corpus(in, cfg);
}

// ---------------------------------------------------------------------------
// Output formats

std::string corpus_csv(const CorpusReport& rep, const VerifyConfig& cfg) {
    std::ostringstream out;
    out << "name,components,crossings,arcs,det,lk_total";
    for (long long n : cfg.n_values) out << ",fox" << n << ",twotone" << n << ",surj" << n;
    out << ",twotone_inf,surj_inf,flags,status\n";
    for (const auto& row : rep.rows) {
        const ClassificationReport& r = row.report;
        out << r.name << ',' << r.components << ',' << r.crossings << ',' << r.arcs << ','
            << r.det.value.str() << ',' << r.lk.total();
        for (const auto& [n, cell] : r.per_n) {
            if (!cell.error.empty())
                out << ",err,err,err";
            else
                out << ',' << cell.fox << ',' << cell.two_tone << ',' << cell.surjective;
        }
        out << ',' << r.two_tone_inf << ',' << r.surjective_inf << ',';
        bool first = true;
        for (const Flag& f : r.flags) {
            if (!f.ok) {
                out << (first ? "" : ";") << f.name;
                first = false;
            }
        }
        for (const Flag& f : row.extra) {
            if (!f.ok) {
                out << (first ? "" : ";") << f.name;
                first = false;
            }
        }
        out << ',' << (row.ok ? "ok" : "FAIL") << '\n';
    }
    return out.str();
}

std::string classification_table(const ClassificationReport& r) {
    std::ostringstream out;
    if (!r.name.empty()) out << "link: " << r.name << '\n';
    out << "components: " << r.components << "  crossings: " << r.crossings
        << "  arcs: " << r.arcs << '\n';
    out << "linking matrix:";
    for (int i = 0; i < r.lk.components(); ++i) {
        out << (i ? " |" : " ");
        for (int j = 0; j < r.lk.components(); ++j) out << ' ' << r.lk.at(i, j);
    }
    out << '\n';
    out << "det: " << r.det.value.str() << "  (free rank " << r.det.free_rank << "; divisors";
    for (const Int& v : r.det.divisors) out << ' ' << v.str();
    out << ")\ncomponent dets:";
    for (const Int& v : r.component_dets) out << ' ' << v.str();
    out << '\n';
    for (const auto& [n, cell] : r.per_n) {
        out << "n=" << n << ": ";
        if (!cell.error.empty()) {
            out << "error: " << cell.error << '\n';
            continue;
        }
        out << "fox=" << (cell.fox ? "yes" : "no") << " (count " << cell.fox_count.str() << ")"
            << "  two-tone=" << (cell.two_tone ? "yes" : "no")
            << "  surjective=" << (cell.surjective ? "yes" : "no");
        if (!cell.two_tone_witness.empty()) out << "  tt-witness " << cell.two_tone_witness;
        if (!cell.surjection_witness.empty()) out << "  surj-witness " << cell.surjection_witness;
        out << '\n';
    }
    out << "n=inf: two-tone=" << (r.two_tone_inf ? "yes" : "no")
        << "  surjective=" << (r.surjective_inf ? "yes" : "no");
    if (!r.two_tone_inf_witness.empty()) out << "  tt-witness " << r.two_tone_inf_witness;
    if (!r.surjection_inf_witness.empty()) out << "  surj-witness " << r.surjection_inf_witness;
    out << '\n';
    for (const Flag& f : r.flags)
        if (!f.ok) out << "FLAG " << f.name << ": " << f.detail << '\n';
    out << "consistent: " << (r.consistent ? "yes" : "NO") << '\n';
    return out.str();
}

std::string classification_record(const ClassificationReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["components"] = r.components;
    j["crossings"] = r.crossings;
    j["arcs"] = r.arcs;
    {
        std::vector<std::vector<long long>> lk;
        for (int i = 0; i < r.lk.components(); ++i) {
            std::vector<long long> rowv;
            for (int jj = 0; jj < r.lk.components(); ++jj) rowv.push_back(r.lk.at(i, jj));
            lk.push_back(std::move(rowv));
        }
        j["linking"] = lk;
    }
    j["det"] = r.det.value.str();
    j["free_rank"] = r.det.free_rank;
    {
        std::vector<std::string> divs;
        for (const Int& v : r.det.divisors) divs.push_back(v.str());
        j["divisors"] = divs;
        std::vector<std::string> cd;
        for (const Int& v : r.component_dets) cd.push_back(v.str());
        j["component_dets"] = cd;
    }
    nlohmann::json per;
    for (const auto& [n, cell] : r.per_n) {
        nlohmann::json c;
        if (!cell.error.empty()) {
            c["error"] = cell.error;
        } else {
            c["fox"] = cell.fox;
            c["fox_count"] = cell.fox_count.str();
            c["two_tone"] = cell.two_tone;
            c["surjective"] = cell.surjective;
            if (!cell.two_tone_witness.empty()) c["two_tone_witness"] = cell.two_tone_witness;
            if (!cell.surjection_witness.empty())
                c["surjection_witness"] = cell.surjection_witness;
        }
        per[std::to_string(n)] = std::move(c);
    }
    j["per_degree"] = std::move(per);
    j["two_tone_inf"] = r.two_tone_inf;
    j["surjective_inf"] = r.surjective_inf;
    if (!r.two_tone_inf_witness.empty()) j["two_tone_inf_witness"] = r.two_tone_inf_witness;
    if (!r.surjection_inf_witness.empty())
        j["surjection_inf_witness"] = r.surjection_inf_witness;
    nlohmann::json flags = nlohmann::json::array();
    for (const Flag& f : r.flags) flags.push_back({{"name", f.name}, {"ok", f.ok}});
    j["flags"] = std::move(flags);
    j["consistent"] = r.consistent;
    return j.dump();
}

}  // namespace linkcolor

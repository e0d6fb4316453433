#include "linkcolor/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace linkcolor {

namespace {

enum class EndState { unknown, head, tail };

struct End {
    int crossing;
    int slot;
    bool operator==(const End&) const = default;
};

std::string label_err(const std::string& what, int label) {
    return what + " (arc " + std::to_string(label) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Validation + derived structure

Diagram Diagram::from_oriented(std::vector<Crossing> crossings, std::vector<int> circles,
                               int label_count) {
    Diagram d;
    d.crossings_ = std::move(crossings);
    d.circles_ = std::move(circles);
    d.label_count_ = label_count;
    for (auto& x : d.crossings_) {
        if (x.over_in_slot != 1 && x.over_in_slot != 3)
            throw ParseError("crossing with invalid over-strand orientation");
        x.sign = (x.over_in_slot == 3) ? +1 : -1;
    }
    d.derive();
    return d;
}

void Diagram::derive() {
    const int n = label_count_;
    std::vector<std::vector<End>> ends(n + 1);
    std::vector<int> circle_uses(n + 1, 0);

    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
        for (int s = 0; s < 4; ++s) {
            int lab = crossings_[c].slots[s];
            if (lab < 1 || lab > n) throw ParseError(label_err("arc label out of range", lab));
            ends[lab].push_back({c, s});
        }
    for (int lab : circles_) {
        if (lab < 1 || lab > n) throw ParseError(label_err("arc label out of range", lab));
        ++circle_uses[lab];
    }
    for (int lab = 1; lab <= n; ++lab) {
        if (circle_uses[lab] > 1 || (circle_uses[lab] == 1 && !ends[lab].empty()))
            throw ParseError(label_err("arc used both as circle and crossing end", lab));
        if (circle_uses[lab] == 0 && ends[lab].size() != 2)
            throw ParseError(label_err("arc must appear exactly twice among crossings", lab));
    }

    // Every arc ends at exactly one crossing (its head) and starts at one.
    auto is_head = [&](const End& e) {
        const Crossing& x = crossings_[e.crossing];
        return e.slot == 0 || e.slot == x.over_in_slot;
    };
    std::vector<End> head_of(n + 1, End{-1, -1});
    for (int lab = 1; lab <= n; ++lab) {
        if (ends[lab].empty()) continue;
        int heads = 0;
        for (const End& e : ends[lab])
            if (is_head(e)) {
                ++heads;
                head_of[lab] = e;
            }
        if (heads != 1) throw ParseError(label_err("inconsistent strand traversal", lab));
    }

    // Strand successor: continue through the crossing at the head.
    auto successor = [&](int lab) {
        const End& e = head_of[lab];
        return crossings_[e.crossing].slots[e.slot ^ 2];
    };

    label_component_.assign(n + 1, -1);
    components_.clear();

    std::vector<std::pair<int, Component>> comps;  // keyed by smallest label
    std::vector<bool> seen(n + 1, false);
    for (int lab = 1; lab <= n; ++lab) {
        if (seen[lab] || circle_uses[lab]) continue;
        Component comp;
        int cur = lab;
        do {
            if (seen[cur]) throw ParseError(label_err("inconsistent strand traversal", cur));
            seen[cur] = true;
            comp.arcs.push_back(cur);
            cur = successor(cur);
        } while (cur != lab);
        comps.emplace_back(lab, std::move(comp));
    }
    for (int lab : circles_) {
        Component comp;
        comp.circle = lab;
        comps.emplace_back(lab, std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, comp] : comps) {
        int id = static_cast<int>(components_.size());
        if (comp.is_circle())
            label_component_[comp.circle] = id;
        else
            for (int arc : comp.arcs) label_component_[arc] = id;
        components_.push_back(std::move(comp));
    }

    // Merge the two over slots of every crossing: a color is constant along a
    // strand passing over.
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const Crossing& x : crossings_) {
        int a = find(x.slots[1]), b = find(x.slots[3]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    label_arc_.assign(n + 1, -1);
    arc_component_.clear();
    arc_min_label_.clear();
    int next = 0;
    for (int lab = 1; lab <= n; ++lab) {
        int r = find(lab);
        if (label_arc_[r] < 0) {
            label_arc_[r] = next++;
            arc_component_.push_back(label_component_[lab]);
            arc_min_label_.push_back(r);
        }
        label_arc_[lab] = label_arc_[r];
    }
    arc_count_ = next;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    char kind;  // 'X' or 'O'
    std::vector<int> args;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Token t;
        if (tok.size() < 4 || (tok[0] != 'X' && tok[0] != 'O') || tok[1] != '[' ||
            tok.back() != ']')
            throw ParseError("malformed token '" + tok + "'");
        t.kind = tok[0];
        std::string body = tok.substr(2, tok.size() - 3);
        std::istringstream args(body);
        std::string field;
        while (std::getline(args, field, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(field, &pos);
                if (pos != field.size() || v < 1) throw std::invalid_argument(field);
                t.args.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("malformed token '" + tok + "'");
            }
        }
        if ((t.kind == 'X' && t.args.size() != 4) || (t.kind == 'O' && t.args.size() != 1))
            throw ParseError("malformed token '" + tok + "'");
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Diagram Diagram::parse(const std::string& text) {
    std::vector<Token> tokens = tokenize(text);

    std::vector<Crossing> crossings;
    std::vector<int> circles;
    int label_count = 0;
    for (const Token& t : tokens) {
        for (int v : t.args) label_count = std::max(label_count, v);
        if (t.kind == 'X') {
            Crossing x;
            std::copy(t.args.begin(), t.args.end(), x.slots.begin());
            crossings.push_back(x);
        } else {
            circles.push_back(t.args[0]);
        }
    }

    const int nc = static_cast<int>(crossings.size());
    std::vector<std::vector<End>> ends(label_count + 1);
    for (int c = 0; c < nc; ++c)
        for (int s = 0; s < 4; ++s) ends[crossings[c].slots[s]].push_back({c, s});
    for (int lab : circles)
        if (!ends[lab].empty())
            throw ParseError(label_err("arc used both as circle and crossing end", lab));
    for (int lab = 1; lab <= label_count; ++lab) {
        bool circ = std::find(circles.begin(), circles.end(), lab) != circles.end();
        if (!circ && ends[lab].size() != 2)
            throw ParseError(label_err("arc must appear exactly twice among crossings", lab));
    }

    // Infer strand directions. Under slots are fixed (slot 0 enters, slot 2
    // leaves), each arc has one entering and one leaving end, and the two
    // over slots of a crossing carry opposite roles. Propagate to a fixpoint.
    std::vector<std::array<EndState, 4>> state(
        nc, {EndState::unknown, EndState::unknown, EndState::unknown, EndState::unknown});
    std::vector<int> work;
    auto set_state = [&](int c, int s, EndState v) {
        if (state[c][s] == v) return;
        if (state[c][s] != EndState::unknown)
            throw ParseError(label_err("inconsistent strand traversal", crossings[c].slots[s]));
        state[c][s] = v;
        work.push_back(crossings[c].slots[s]);
    };
    auto opposite = [](EndState v) {
        return v == EndState::head ? EndState::tail : EndState::head;
    };
    for (int c = 0; c < nc; ++c) {
        set_state(c, 0, EndState::head);
        set_state(c, 2, EndState::tail);
    }
    while (!work.empty()) {
        int lab = work.back();
        work.pop_back();
        const auto& es = ends[lab];
        if (es.size() == 2) {
            EndState s0 = state[es[0].crossing][es[0].slot];
            EndState s1 = state[es[1].crossing][es[1].slot];
            if (s0 != EndState::unknown && s1 == EndState::unknown)
                set_state(es[1].crossing, es[1].slot, opposite(s0));
            else if (s1 != EndState::unknown && s0 == EndState::unknown)
                set_state(es[0].crossing, es[0].slot, opposite(s1));
            else if (s0 != EndState::unknown && s0 == s1)
                throw ParseError(label_err("inconsistent strand traversal", lab));
        }
        for (const End& e : es) {
            if (e.slot == 0 || e.slot == 2) continue;
            int other = e.slot ^ 2;
            if (state[e.crossing][e.slot] != EndState::unknown &&
                state[e.crossing][other] == EndState::unknown)
                set_state(e.crossing, other, opposite(state[e.crossing][e.slot]));
        }
    }

    // Components that never pass under are untouched by the propagation;
    // orient them so that labels mostly increase along the strand.
    std::vector<bool> visited(label_count + 1, false);
    for (int lab = 1; lab <= label_count; ++lab) {
        if (ends[lab].size() != 2 || visited[lab]) continue;
        if (state[ends[lab][0].crossing][ends[lab][0].slot] != EndState::unknown) continue;

        std::vector<std::pair<End, End>> steps;  // (entering end, leaving end)
        End start = ends[lab][0];
        End cur = start;
        int cur_lab = lab;
        do {
            visited[cur_lab] = true;
            End leave{cur.crossing, cur.slot ^ 2};
            int nxt = crossings[leave.crossing].slots[leave.slot];
            steps.emplace_back(cur, leave);
            const auto& ne = ends[nxt];
            cur = (ne[0] == leave) ? ne[1] : ne[0];
            cur_lab = nxt;
        } while (!(cur_lab == lab && cur == start));

        auto plus_steps = [&](bool forward) {
            int count = 0;
            for (const auto& [enter, leave] : steps) {
                int a = crossings[enter.crossing].slots[enter.slot];
                int b = crossings[leave.crossing].slots[leave.slot];
                if (forward ? (b == a + 1) : (a == b + 1)) ++count;
            }
            return count;
        };
        bool forward = plus_steps(true) >= plus_steps(false);
        for (const auto& [enter, leave] : steps) {
            set_state(enter.crossing, enter.slot, forward ? EndState::head : EndState::tail);
            set_state(leave.crossing, leave.slot, forward ? EndState::tail : EndState::head);
        }
    }

    for (int c = 0; c < nc; ++c) {
        if (state[c][1] == EndState::unknown || state[c][1] == state[c][3])
            throw ParseError("inconsistent strand traversal at crossing " + std::to_string(c + 1));
        crossings[c].over_in_slot = (state[c][1] == EndState::head) ? 1 : 3;
    }

    return from_oriented(std::move(crossings), std::move(circles), label_count);
}

std::string Diagram::serialize() const {
    std::ostringstream out;
    bool first = true;
    for (const Crossing& x : crossings_) {
        if (!first) out << ' ';
        first = false;
        out << "X[" << x.slots[0] << ',' << x.slots[1] << ',' << x.slots[2] << ',' << x.slots[3]
            << ']';
    }
    std::vector<int> circ = circles_;
    std::sort(circ.begin(), circ.end());
    for (int lab : circ) {
        if (!first) out << ' ';
        first = false;
        out << "O[" << lab << ']';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Assembler: build a diagram from crossings with abstract ports, then derive
// orientation and canonical labels. Ports are numbered counterclockwise; the
// strand runs through opposite ports, pair {0,2} or pair {1,3}.

namespace {

class Assembler {
public:
    // vertical_over: the strand through ports {0,2} passes over.
    int add_crossing(bool vertical_over) {
        protos_.push_back(Proto{vertical_over, {-1, -1, -1, -1}});
        return static_cast<int>(protos_.size()) - 1;
    }

    // Wire from (c1,p1) to (c2,p2). The argument order is a flow hint: the
    // smallest wire of each component fixes that component's orientation.
    void weld(int c1, int p1, int c2, int p2) {
        int w = static_cast<int>(wires_.size());
        wires_.push_back(Wire{{c1, p1}, {c2, p2}});
        attach(c1, p1, w);
        attach(c2, p2, w);
    }

    void add_circle() { ++circles_; }

    // port_labels, when given, receives the arc label at every (crossing,port).
    Diagram build(std::vector<std::array<int, 4>>* port_labels = nullptr) const {
        const int nw = static_cast<int>(wires_.size());
        for (const Proto& p : protos_)
            for (int s = 0; s < 4; ++s)
                if (p.wire[s] < 0) throw std::logic_error("assembler: unwelded port");

        // Orient components: walk from each component's smallest wire in the
        // hinted direction, recording where every wire enters a crossing.
        std::vector<End> head(nw, End{-1, -1});
        std::vector<int> order;  // wires in label order
        std::vector<bool> seen(nw, false);
        for (int w0 = 0; w0 < nw; ++w0) {
            if (seen[w0]) continue;
            int w = w0;
            End h = wires_[w0].b;
            do {
                seen[w] = true;
                order.push_back(w);
                head[w] = h;
                End leave{h.crossing, h.slot ^ 2};
                int nxt = protos_[leave.crossing].wire[leave.slot];
                const Wire& x = wires_[nxt];
                h = (x.a == leave) ? x.b : x.a;
                w = nxt;
            } while (w != w0);
        }
        std::vector<int> label(nw, 0);
        int next = 1;
        for (int w : order) label[w] = next++;

        std::vector<Crossing> crossings(protos_.size());
        if (port_labels) port_labels->assign(protos_.size(), {0, 0, 0, 0});
        for (int c = 0; c < static_cast<int>(protos_.size()); ++c) {
            const Proto& p = protos_[c];
            auto entry = [&](int pa, int pb) {
                bool ha = head[p.wire[pa]] == End{c, pa};
                bool hb = head[p.wire[pb]] == End{c, pb};
                if (ha == hb) throw std::logic_error("assembler: bad strand orientation");
                return ha ? pa : pb;
            };
            int v_in = entry(0, 2), h_in = entry(1, 3);
            int u = p.vertical_over ? h_in : v_in;
            int o = p.vertical_over ? v_in : h_in;
            Crossing& x = crossings[c];
            for (int i = 0; i < 4; ++i) x.slots[i] = label[p.wire[(u + i) & 3]];
            x.over_in_slot = (o - u) & 3;
            if (port_labels)
                for (int i = 0; i < 4; ++i) (*port_labels)[c][i] = label[p.wire[i]];
        }

        std::vector<int> circ;
        for (int i = 0; i < circles_; ++i) circ.push_back(next++);
        return Diagram::from_oriented(std::move(crossings), std::move(circ), next - 1);
    }

private:
    struct Proto {
        bool vertical_over;
        std::array<int, 4> wire;
    };
    struct Wire {
        End a, b;
    };

    void attach(int c, int p, int w) {
        if (protos_[c].wire[p] >= 0) throw std::logic_error("assembler: port welded twice");
        protos_[c].wire[p] = w;
    }

    std::vector<Proto> protos_;
    std::vector<Wire> wires_;
    int circles_ = 0;
};

// Stack of same-handed crossings forming a vertical 2-braid; returns
// (first,last) crossing ids. Welds run down both sides between consecutive
// crossings: port 0 (bottom-left) to port 3 (top-left), 1 to 2 on the right.
std::pair<int, int> braid_stack(Assembler& a, int count, bool vertical_over) {
    int first = -1, prev = -1;
    for (int i = 0; i < count; ++i) {
        int c = a.add_crossing(vertical_over);
        if (i == 0)
            first = c;
        else {
            a.weld(prev, 0, c, 3);
            a.weld(prev, 1, c, 2);
        }
        prev = c;
    }
    return {first, prev};
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

Diagram Diagram::torus_two_strand(int q) {
    if (q < 1) throw std::invalid_argument("torus_two_strand: q must be >= 1");
    Assembler a;
    for (int i = 0; i < q; ++i) a.add_crossing(false);
    for (int i = 0; i < q; ++i) {
        int j = (i + 1) % q;
        a.weld(i, 0, j, 3);
        a.weld(i, 1, j, 2);
    }
    return a.build();
}

Diagram Diagram::pretzel(const std::vector<int>& twists) {
    if (twists.empty()) throw std::invalid_argument("pretzel: empty twist sequence");
    for (int t : twists)
        if (t == 0) throw std::invalid_argument("pretzel: twist counts must be nonzero");

    Assembler a;
    const int k = static_cast<int>(twists.size());
    std::vector<std::pair<int, int>> region(k);
    for (int r = 0; r < k; ++r) region[r] = braid_stack(a, std::abs(twists[r]), twists[r] < 0);
    for (int r = 0; r < k; ++r) {
        int s = (r + 1) % k;
        a.weld(region[r].first, 2, region[s].first, 3);    // top rail
        a.weld(region[r].second, 1, region[s].second, 0);  // bottom rail
    }
    return a.build();
}

StandardForm generate_standard_form(const StandardFormSpec& spec) {
    const int boxes = static_cast<int>(spec.box_twists.size());
    int claimed = 0;
    for (int p : spec.component_passes) {
        if (p < 1) throw std::invalid_argument("standard form: component needs >= 1 pass");
        claimed += p;
    }
    if (claimed != boxes)
        throw std::invalid_argument("standard form: passes must cover the twist boxes exactly");
    for (int t : spec.box_twists)
        if (t == 0) throw std::invalid_argument("standard form: empty twist box");

    // Even total twist count per closure component: this is the evenness of
    // lk(l0, component) needed for the pattern to close up.
    int at = 0;
    for (std::size_t c = 0; c < spec.component_passes.size(); ++c) {
        int sum = 0;
        for (int j = 0; j < spec.component_passes[c]; ++j) sum += std::abs(spec.box_twists[at++]);
        if (sum % 2 != 0)
            throw std::invalid_argument("standard form: closure component " + std::to_string(c) +
                                        " has odd linking with the round component");
    }

    StandardForm out;
    Assembler a;
    if (boxes == 0) {
        a.add_circle();
        out.diagram = a.build();
        out.l0_component = 0;
        out.alpha_label = 1;
        return out;
    }

    // The round component runs down the right side of every box; each box is
    // a stack of 2*|t| same-handed crossings (t full twists) against one pass
    // of a closure component on the left side. With this layout a box maps
    // entering colors (a_i, b_j) to exits (a_{i-2j}, b_{n-j}).
    std::vector<std::pair<int, int>> box(boxes);
    for (int j = 0; j < boxes; ++j)
        box[j] = braid_stack(a, 2 * std::abs(spec.box_twists[j]), spec.box_twists[j] < 0);
    a.weld(box[boxes - 1].second, 1, box[0].first, 2);  // closing arc of l0
    for (int j = 0; j + 1 < boxes; ++j) a.weld(box[j].second, 1, box[j + 1].first, 2);
    at = 0;
    for (int p : spec.component_passes) {
        int lo = at, hi = at + p;
        for (int j = lo; j + 1 < hi; ++j) a.weld(box[j].second, 0, box[j + 1].first, 3);
        a.weld(box[hi - 1].second, 0, box[lo].first, 3);
        at = hi;
    }

    std::vector<std::array<int, 4>> port_labels;
    out.diagram = a.build(&port_labels);

    out.alpha_label = port_labels[box[0].first][2];
    out.l0_component = out.diagram.component_of_label(out.alpha_label);
    at = 0;
    for (int p : spec.component_passes) {
        out.beta_labels.push_back(port_labels[box[at].first][3]);
        at += p;
    }
    for (int j = 0; j < boxes; ++j)
        out.boxes.push_back(StandardForm::BoxPorts{
            port_labels[box[j].first][2], port_labels[box[j].second][1],
            port_labels[box[j].first][3], port_labels[box[j].second][0]});
    return out;
}

// ---------------------------------------------------------------------------
// Transforms

Diagram Diagram::sublink(const std::vector<ComponentId>& keep) const {
    std::vector<bool> kept(components_.size(), false);
    for (int c : keep) {
        if (c < 0 || c >= component_count()) throw std::invalid_argument("sublink: bad component");
        kept[c] = true;
    }
    bool all = std::all_of(kept.begin(), kept.end(), [](bool b) { return b; });
    if (all) return *this;

    auto crossing_kept = [&](const Crossing& x) {
        return kept[label_component_[x.under_in()]] && kept[label_component_[x.over_in()]];
    };

    // Head crossing of each label (where the strand enters).
    std::vector<int> head_crossing(label_count_ + 1, -1);
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const Crossing& x = crossings_[c];
        head_crossing[x.under_in()] = c;
        head_crossing[x.over_in()] = c;
    }

    // Merge arcs across deleted crossings, walking each kept component.
    std::vector<int> new_label(label_count_ + 1, 0);
    std::vector<int> new_circles;
    int next = 1;
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
        if (!kept[ci]) continue;
        const Component& comp = components_[ci];
        if (comp.is_circle()) continue;  // relabeled after edge components
        const auto& arcs = comp.arcs;
        const int m = static_cast<int>(arcs.size());
        // kept passes: transitions arcs[i] -> arcs[i+1] at surviving crossings
        std::vector<int> kept_pass;
        for (int i = 0; i < m; ++i)
            if (crossing_kept(crossings_[head_crossing[arcs[i]]])) kept_pass.push_back(i);
        if (kept_pass.empty()) {
            for (int lab : arcs) new_label[lab] = -1;  // melts into a circle
            continue;
        }
        // The run after kept pass p covers arcs[p+1..p'] for the next kept
        // pass p'; all arcs in a run share one new label. Labels start at the
        // run containing the component's smallest label.
        std::vector<int> run_of(m, -1);
        int runs = static_cast<int>(kept_pass.size());
        for (int r = 0; r < runs; ++r) {
            int from = kept_pass[r];
            int to = kept_pass[(r + 1) % runs];
            for (int i = (from + 1) % m; ; i = (i + 1) % m) {
                run_of[i] = r;
                if (i == to) break;
            }
        }
        int min_pos = 0;
        for (int i = 1; i < m; ++i)
            if (arcs[i] < arcs[min_pos]) min_pos = i;
        int first_run = run_of[min_pos];
        std::vector<int> run_label(runs);
        for (int r = 0; r < runs; ++r) run_label[(first_run + r) % runs] = next++;
        for (int i = 0; i < m; ++i) new_label[arcs[i]] = run_label[run_of[i]];
    }
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
        if (!kept[ci]) continue;
        const Component& comp = components_[ci];
        if (comp.is_circle())
            new_circles.push_back(next++);
        else if (new_label[comp.arcs[0]] == -1)
            new_circles.push_back(next++);
    }

    std::vector<Crossing> new_crossings;
    for (const Crossing& x : crossings_) {
        if (!crossing_kept(x)) continue;
        Crossing y = x;
        for (int s = 0; s < 4; ++s) y.slots[s] = new_label[x.slots[s]];
        new_crossings.push_back(y);
    }
    return from_oriented(std::move(new_crossings), std::move(new_circles), next - 1);
}

Diagram Diagram::reverse_component(ComponentId c) const {
    if (c < 0 || c >= component_count()) throw std::invalid_argument("reverse: bad component");
    std::vector<Crossing> xs = crossings_;
    for (Crossing& x : xs) {
        bool under = label_component_[x.under_in()] == c;
        bool over = label_component_[x.over_in()] == c;
        if (under) {
            std::rotate(x.slots.begin(), x.slots.begin() + 2, x.slots.end());
            x.over_in_slot ^= 2;
        }
        if (over) x.over_in_slot ^= 2;
    }
    return from_oriented(std::move(xs), circles_, label_count_);
}

}  // namespace linkcolor

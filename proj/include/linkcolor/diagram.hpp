#pragma once

#include <array>
#include <string>
#include <vector>

#include "linkcolor/bigint.hpp"

namespace linkcolor {

using ComponentId = int;

// One crossing of an oriented diagram. slots lists the four incident arc
// labels counterclockwise starting from the incoming under-arc; over_in_slot
// (1 or 3) marks where the over-strand enters. The sign is +1 exactly when
// the over-strand leaves at slots[1].
struct Crossing {
    std::array<int, 4> slots{};
    int over_in_slot = 3;
    int sign = 0;

    int under_in() const { return slots[0]; }
    int under_out() const { return slots[2]; }
    int over_in() const { return slots[over_in_slot]; }
    int over_out() const { return slots[over_in_slot ^ 2]; }

    bool operator==(const Crossing&) const = default;
};

// A link component: a cyclic, orientation-ordered sequence of arc labels,
// or a crossing-free circle carrying a single label.
struct Component {
    std::vector<int> arcs;
    int circle = 0;
    bool is_circle() const { return arcs.empty(); }
};

// Oriented link diagram over arcs labeled 1..label_count. Labels are the
// units of the PD text (each appears twice among crossing slots, once per O
// token for circles); color variables live on the merged strands obtained by
// gluing the two over slots of every crossing.
class Diagram {
public:
    Diagram() = default;

    // Text format: whitespace-separated tokens X[a,b,c,d] and O[i].
    // Orientation is recovered from the under-strand direction at each
    // crossing (slot 1 -> slot 3); label order only breaks the tie for
    // components that never pass under.
    static Diagram parse(const std::string& text);
    std::string serialize() const;

    // Crossings come with orientation already fixed; validates and derives
    // components, strands and signs.
    static Diagram from_oriented(std::vector<Crossing> crossings, std::vector<int> circles,
                                 int label_count);

    static Diagram torus_two_strand(int q);
    static Diagram pretzel(const std::vector<int>& twists);

    Diagram sublink(const std::vector<ComponentId>& keep) const;
    Diagram reverse_component(ComponentId c) const;

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<int>& circles() const { return circles_; }
    int label_count() const { return label_count_; }

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<Component>& components() const { return components_; }
    int component_of_label(int label) const { return label_component_[label]; }

    // Merged strands ("arcs" in the coloring sense), indexed 0..arc_count-1
    // in order of their smallest label.
    int arc_count() const { return arc_count_; }
    int arc_of_label(int label) const { return label_arc_[label]; }
    int arc_component(int arc) const { return arc_component_[arc]; }
    int arc_min_label(int arc) const { return arc_min_label_[arc]; }

    int over_arc(const Crossing& x) const { return arc_of_label(x.over_in()); }
    int under_in_arc(const Crossing& x) const { return arc_of_label(x.under_in()); }
    int under_out_arc(const Crossing& x) const { return arc_of_label(x.under_out()); }

    bool operator==(const Diagram& o) const {
        return crossings_ == o.crossings_ && circles_ == o.circles_ &&
               label_count_ == o.label_count_;
    }

private:
    void derive();

    std::vector<Crossing> crossings_;
    std::vector<int> circles_;
    int label_count_ = 0;

    std::vector<Component> components_;
    std::vector<int> label_component_;  // 1-based label -> component
    std::vector<int> label_arc_;        // 1-based label -> merged strand
    std::vector<int> arc_component_;
    std::vector<int> arc_min_label_;
    int arc_count_ = 0;
};

// Fig-style standard position: a round trivial component l0 meeting the rest
// of the link only in a single column of twist boxes; box j holds
// box_twists[j] full twists (2*|t| crossings). component_passes gives, per
// closure component, how many boxes it runs through; boxes are handed out in
// order. Rejected unless every closure component has an even total twist count.
struct StandardFormSpec {
    std::vector<int> box_twists;
    std::vector<int> component_passes;
};

struct StandardForm {
    Diagram diagram;
    int l0_component = 0;
    int alpha_label = 0;               // closing arc of l0
    std::vector<int> beta_labels;      // one seed arc per closure component
    struct BoxPorts {
        int lambda_in, lambda_out, rho_in, rho_out;
    };
    std::vector<BoxPorts> boxes;       // labels at the four corners of each box
};

StandardForm generate_standard_form(const StandardFormSpec& spec);

}  // namespace linkcolor

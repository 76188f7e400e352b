#pragma once

// Unoriented link diagrams as PD-style data: each crossing stores the arc
// id at its four counterclockwise ports, with the under-strand through
// p0–p2 and the over-strand through p1–p3. Jones' construction turns a
// reduced tree pair into such a diagram by replacing every branching with
// a crossing whose child cap passes over the stem/through line.

#include "thompson/element.hpp"

#include <array>
#include <optional>
#include <vector>

namespace thompson {

struct Crossing {
    std::array<int, 4> arc;  // arc id at ports p0..p3

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Slot = (crossing index, port).
struct Slot {
    int crossing;
    int port;
    friend bool operator==(const Slot&, const Slot&) = default;
};

class LinkDiagram {
public:
    LinkDiagram() : free_loops_(0), arc_count_(0) {}
    // Validates the perfect matching and renumbers arcs canonically
    // (first appearance in crossing/port order).
    LinkDiagram(std::vector<Crossing> crossings, int free_loops);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int free_loops() const { return free_loops_; }
    int arc_count() const { return arc_count_; }

    // Both slots of each arc, indexed by arc id.
    std::vector<std::array<Slot, 2>> arc_slots() const;

    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

private:
    std::vector<Crossing> crossings_;
    int free_loops_;
    int arc_count_;
};

// Metadata produced alongside a built diagram.
struct BuiltLink {
    LinkDiagram diagram;
    int closure_arc = -1;                 // arc joining the two root stems (-1 for the unknot)
    std::vector<int> s_vertex_crossing;   // crossing id per bottom-tree internal vertex (preorder)
    std::vector<int> t_vertex_crossing;   // crossing id per top-tree internal vertex (preorder)
    std::vector<int> s_vertex_gap;        // leaf gap per bottom-tree internal vertex
    std::vector<int> t_vertex_gap;
};

// Jones' construction on the reduced pair of g (flavor F). The pair-level
// form accepts unreduced pairs for stabilization experiments.
BuiltLink build_link_pair(const Tree& t, const Tree& s);
LinkDiagram build_link(const GroupElement& g);

// Number of closed strands and the component id of each arc.
struct Components {
    int count;
    std::vector<int> arc_component;  // -1 entries never occur; free loops counted separately
};
Components components(const LinkDiagram& d);

// Over/under swap on every crossing; ports rotate by one to keep the
// under-strand on p0–p2.
LinkDiagram mirror(const LinkDiagram& d);

// Writhe of a single-component diagram (orientation-free there).
int writhe(const LinkDiagram& d);

}  // namespace thompson

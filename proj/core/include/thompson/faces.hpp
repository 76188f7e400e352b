#pragma once

// Face structure of a diagram from its rotation system, checkerboard
// shadings, Tait graphs, and the two Jones-subgroup membership tests
// (diagrammatic orientability and the digit-parity stabilizer).

#include "thompson/link.hpp"

#include <vector>

namespace thompson {

// Directed arc side: traveling arc `arc` from slot `from` (0 or 1) toward
// the other slot; the face it bounds lies on the left.
struct HalfEdge {
    int arc;
    int from;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct FaceData {
    int face_count = 0;
    std::vector<int> face_of_half_edge;        // indexed by 2*arc + from
    std::vector<std::vector<HalfEdge>> faces;  // boundary cycles
    std::vector<int> color;                    // checkerboard color per face (0/1)
    int outer_face = -1;                       // face right of the closure arc, when known
    std::vector<int> crossing_component;       // connected component per crossing
    int component_count = 0;                   // crossing-graph components
};

// Faces and the two checkerboard shadings. `closure_arc` (from BuiltLink)
// marks the outer face; pass -1 when unknown. Works per component for
// disconnected diagrams. Free loops are ignored here (they carry no
// crossings).
FaceData faces_and_shading(const LinkDiagram& d, int closure_arc = -1);

struct TaitGraph {
    int vertices = 0;                               // faces of the chosen shade
    std::vector<std::pair<int, int>> edges;         // one per crossing
    std::vector<int> face_of_vertex;                // face id per vertex
};

// Total face count including free-loop interiors and, for diagrams with
// no crossings at all, the ambient face.
int total_face_count(const LinkDiagram& d, const FaceData& faces);

// Tait graph on the faces of the given color (0 or 1).
TaitGraph tait_graph(const LinkDiagram& d, const FaceData& faces, int shade);

bool is_bipartite(const TaitGraph& g);

// Diagrammatic orientability: bipartiteness of the Tait graph on the
// calibrated checkerboard shading of the built diagram of (the reduced) g.
// `use_inner` selects the shading that omits the outer face. The exhaustive
// cross-validation against the stabilizer oracle picks the shading that
// CONTAINS the outer face, so the calibrated default is false.
inline constexpr bool kCalibratedInnerShading = false;
bool is_orientable(const GroupElement& g, bool use_inner = kCalibratedInnerShading);

// Digit-sum-parity stabilizer test: the parities of the binary digit sums
// of matched leaf-interval left endpoints must agree leafwise.
bool stabilizer_member(const GroupElement& g);

}  // namespace thompson

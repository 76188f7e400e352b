#include "thompson/faces.hpp"

#include <numeric>

namespace thompson {

namespace {

struct UF {
    std::vector<int> parent;
    explicit UF(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

FaceData faces_and_shading(const LinkDiagram& d, int closure_arc) {
    FaceData out;
    const int nc = d.crossing_count();
    const int na = d.arc_count();
    auto slots = d.arc_slots();

    // Crossing components (for the per-component fallback and Euler checks).
    {
        UF uf(std::max(nc, 1));
        for (const auto& s : slots) uf.unite(s[0].crossing, s[1].crossing);
        out.crossing_component.assign(static_cast<std::size_t>(nc), -1);
        std::vector<int> root_map;
        for (int c = 0; c < nc; ++c) {
            int r = uf.find(c);
            int id = -1;
            for (std::size_t k = 0; k < root_map.size(); ++k)
                if (root_map[k] == r) id = static_cast<int>(k);
            if (id < 0) {
                id = static_cast<int>(root_map.size());
                root_map.push_back(r);
            }
            out.crossing_component[static_cast<std::size_t>(c)] = id;
        }
        out.component_count = static_cast<int>(root_map.size());
    }

    if (na == 0) return out;

    // half-edge id = 2*arc + from. Traveling into slot (c, p), the face on
    // the left continues outward along port p-1 (clockwise neighbour).
    auto arc_at = [&](int c, int p) {
        return d.crossings()[static_cast<std::size_t>(c)].arc[static_cast<std::size_t>(p)];
    };
    auto next_half_edge = [&](int he) -> int {
        int arc = he / 2;
        int from = he % 2;
        Slot target = slots[static_cast<std::size_t>(arc)][static_cast<std::size_t>(1 - from)];
        int out_port = (target.port + 3) % 4;
        int next_arc = arc_at(target.crossing, out_port);
        const auto& ns = slots[static_cast<std::size_t>(next_arc)];
        int from2 = (ns[0].crossing == target.crossing && ns[0].port == out_port) ? 0 : 1;
        // An arc can have both ends on the same (crossing, port)? No: ports
        // are distinct slots, but both ends may sit on the same crossing.
        if (ns[0].crossing == target.crossing && ns[1].crossing == target.crossing &&
            ns[0].port == ns[1].port)
            throw domain_error("degenerate arc");
        return 2 * next_arc + from2;
    };

    out.face_of_half_edge.assign(static_cast<std::size_t>(2 * na), -1);
    for (int start = 0; start < 2 * na; ++start) {
        if (out.face_of_half_edge[static_cast<std::size_t>(start)] >= 0) continue;
        int id = out.face_count++;
        out.faces.emplace_back();
        int he = start;
        do {
            out.face_of_half_edge[static_cast<std::size_t>(he)] = id;
            out.faces.back().push_back({he / 2, he % 2});
            he = next_half_edge(he);
        } while (he != start);
    }

    // Checkerboard colors: faces across an arc differ. BFS per component
    // of the face-adjacency graph.
    out.color.assign(static_cast<std::size_t>(out.face_count), -1);
    for (int seed = 0; seed < out.face_count; ++seed) {
        if (out.color[static_cast<std::size_t>(seed)] >= 0) continue;
        out.color[static_cast<std::size_t>(seed)] = 0;
        std::vector<int> queue{seed};
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (const HalfEdge& he : out.faces[static_cast<std::size_t>(f)]) {
                int other = out.face_of_half_edge[static_cast<std::size_t>(2 * he.arc +
                                                                           (1 - he.from))];
                int want = 1 - out.color[static_cast<std::size_t>(f)];
                int& c = out.color[static_cast<std::size_t>(other)];
                if (c < 0) {
                    c = want;
                    queue.push_back(other);
                } else if (c != want) {
                    throw domain_error("diagram is not checkerboard colorable");
                }
            }
        }
    }

    if (closure_arc >= 0 && closure_arc < na) {
        // The closure arc runs from the bottom root stem (slot on the
        // bottom tree) to the top root stem; the outer region lies to the
        // right of that travel, i.e. on the left of the reverse direction.
        int from = slots[static_cast<std::size_t>(closure_arc)][0].crossing <
                           slots[static_cast<std::size_t>(closure_arc)][1].crossing
                       ? 1
                       : 0;
        out.outer_face = out.face_of_half_edge[static_cast<std::size_t>(2 * closure_arc + from)];
    }
    return out;
}

TaitGraph tait_graph(const LinkDiagram& d, const FaceData& faces, int shade) {
    TaitGraph g;
    std::vector<int> vertex_of_face(static_cast<std::size_t>(faces.face_count), -1);
    for (int f = 0; f < faces.face_count; ++f)
        if (faces.color[static_cast<std::size_t>(f)] == shade) {
            vertex_of_face[static_cast<std::size_t>(f)] = g.vertices++;
            g.face_of_vertex.push_back(f);
        }
    auto slots = d.arc_slots();
    auto face_at_wedge = [&](int c, int wedge) {
        // Wedge between ports (wedge, wedge+1) is swept by the half-edge
        // arriving at port wedge+1.
        int p = (wedge + 1) % 4;
        int arc = d.crossings()[static_cast<std::size_t>(c)].arc[static_cast<std::size_t>(p)];
        const auto& ns = slots[static_cast<std::size_t>(arc)];
        int from = (ns[1].crossing == c && ns[1].port == p) ? 0 : 1;
        return faces.face_of_half_edge[static_cast<std::size_t>(2 * arc + from)];
    };
    for (int c = 0; c < d.crossing_count(); ++c) {
        int w0 = face_at_wedge(c, 0);
        int w1 = face_at_wedge(c, 1);
        int w2 = face_at_wedge(c, 2);
        int w3 = face_at_wedge(c, 3);
        int c0 = faces.color[static_cast<std::size_t>(w0)];
        if (faces.color[static_cast<std::size_t>(w2)] != c0 ||
            faces.color[static_cast<std::size_t>(w1)] == c0 ||
            faces.color[static_cast<std::size_t>(w3)] == c0)
            throw domain_error("wedge colors do not alternate");
        int fa = c0 == shade ? w0 : w1;
        int fb = c0 == shade ? w2 : w3;
        g.edges.emplace_back(vertex_of_face[static_cast<std::size_t>(fa)],
                             vertex_of_face[static_cast<std::size_t>(fb)]);
    }
    return g;
}

bool is_bipartite(const TaitGraph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertices), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertices));
    for (const auto& [a, b] : g.edges) {
        if (a == b) return false;  // a loop is an odd cycle
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (int seed = 0; seed < g.vertices; ++seed) {
        if (side[static_cast<std::size_t>(seed)] >= 0) continue;
        side[static_cast<std::size_t>(seed)] = 0;
        std::vector<int> queue{seed};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] ==
                           side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_orientable(const GroupElement& g, bool use_inner) {
    if (g.flavor() != Flavor::F)
        throw domain_error("orientability test is defined for flavor F");
    if (g.is_identity()) return true;  // unknot
    BuiltLink built = build_link_pair(g.top(), g.bottom());
    FaceData faces = faces_and_shading(built.diagram, built.closure_arc);
    int outer_color = faces.color[static_cast<std::size_t>(faces.outer_face)];
    int shade = use_inner ? 1 - outer_color : outer_color;
    return is_bipartite(tait_graph(built.diagram, faces, shade));
}

bool stabilizer_member(const GroupElement& g) {
    if (g.flavor() != Flavor::F)
        throw domain_error("stabilizer test is defined for flavor F");
    auto s_cuts = g.bottom().leaf_cuts();
    auto t_cuts = g.top().leaf_cuts();
    for (int i = 0; i < g.leaves(); ++i) {
        unsigned ps = s_cuts[static_cast<std::size_t>(i)].digit_sum() % 2;
        unsigned pt =
            t_cuts[static_cast<std::size_t>(g.perm()[static_cast<std::size_t>(i)])].digit_sum() % 2;
        if (ps != pt) return false;
    }
    return true;
}

}  // namespace thompson

#include "thompson/link.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace thompson {

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw domain_error("negative free loop count");
    // Arc ids must form a perfect matching on ports: each id exactly twice.
    std::map<int, int> uses;
    for (const Crossing& c : crossings_)
        for (int a : c.arc) {
            if (a < 0) throw domain_error("negative arc id");
            ++uses[a];
        }
    for (const auto& [a, n] : uses)
        if (n != 2) throw domain_error("arc " + std::to_string(a) + " used " + std::to_string(n) +
                                       " times; ports must pair exactly");
    // Canonical renumbering by first appearance.
    std::map<int, int> rename;
    for (Crossing& c : crossings_)
        for (int& a : c.arc) {
            auto it = rename.find(a);
            if (it == rename.end()) it = rename.emplace(a, static_cast<int>(rename.size())).first;
            a = it->second;
        }
    arc_count_ = static_cast<int>(rename.size());
}

std::vector<std::array<Slot, 2>> LinkDiagram::arc_slots() const {
    std::vector<std::array<Slot, 2>> out(static_cast<std::size_t>(arc_count_),
                                         {Slot{-1, -1}, Slot{-1, -1}});
    for (int c = 0; c < crossing_count(); ++c)
        for (int p = 0; p < 4; ++p) {
            int a = crossings_[static_cast<std::size_t>(c)].arc[static_cast<std::size_t>(p)];
            auto& pair = out[static_cast<std::size_t>(a)];
            (pair[0].crossing < 0 ? pair[0] : pair[1]) = Slot{c, p};
        }
    return out;
}

namespace {

// Preorder tree structure with leaf/gap bookkeeping.
struct Nodes {
    std::vector<int> left, right;    // child node ids, -1 for leaves
    std::vector<int> leaf_index;     // leaf number at leaf nodes, -1 otherwise
    std::vector<int> gap;            // leaf gap at internal nodes (1..n-1)
    std::vector<int> internal_rank;  // dense numbering of internal nodes in preorder
    int root = 0;
    int internal_count = 0;

    explicit Nodes(const Tree& t) {
        const std::string& s = t.shape();
        int n = static_cast<int>(s.size());
        left.assign(n, -1);
        right.assign(n, -1);
        leaf_index.assign(n, -1);
        gap.assign(n, -1);
        internal_rank.assign(n, -1);
        int next_leaf = 0;
        int pos = 0;
        auto rec = [&](auto&& self) -> int {
            int id = pos++;
            if (s[static_cast<std::size_t>(id)] == '0') {
                leaf_index[static_cast<std::size_t>(id)] = next_leaf++;
                return id;
            }
            internal_rank[static_cast<std::size_t>(id)] = internal_count++;
            left[static_cast<std::size_t>(id)] = self(self);
            // The gap of an internal vertex sits just after the rightmost
            // leaf of its left subtree.
            gap[static_cast<std::size_t>(id)] = next_leaf;
            right[static_cast<std::size_t>(id)] = self(self);
            return id;
        };
        rec(rec);
    }
};

}  // namespace

BuiltLink build_link_pair(const Tree& t, const Tree& s) {
    if (t.leaf_count() != s.leaf_count())
        throw domain_error("tree pair has mismatched leaf counts");
    const int n = s.leaf_count();
    BuiltLink out;
    if (n == 1) {
        out.diagram = LinkDiagram({}, 1);
        return out;
    }

    Nodes sn(s), tn(t);
    const int cs = sn.internal_count;  // = n - 1, crossings of the bottom tree
    std::vector<Crossing> crossings(static_cast<std::size_t>(2 * cs), Crossing{{-1, -1, -1, -1}});

    // Crossing ids: bottom-tree internal vertices in preorder, then top.
    auto s_cross = [&](int node) { return sn.internal_rank[static_cast<std::size_t>(node)]; };
    auto t_cross = [&](int node) { return cs + tn.internal_rank[static_cast<std::size_t>(node)]; };

    int next_arc = 0;
    auto join = [&](int c1, int p1, int c2, int p2) {
        int a = next_arc++;
        crossings[static_cast<std::size_t>(c1)].arc[static_cast<std::size_t>(p1)] = a;
        crossings[static_cast<std::size_t>(c2)].arc[static_cast<std::size_t>(p2)] = a;
        return a;
    };

    // Ports: bottom vertex [S, E, N, W] = [stem, right cap, through, left cap];
    // top vertex [N, W, S, E] = [stem, left cap, through, right cap].
    constexpr int kStem = 0;
    constexpr int kThrough = 2;
    auto s_cap_port = [](bool left_child) { return left_child ? 3 : 1; };
    auto t_cap_port = [](bool left_child) { return left_child ? 1 : 3; };

    // Leaf endpoints (crossing, port) awaiting the cross-tree gluing.
    std::vector<Slot> s_leaf(static_cast<std::size_t>(n)), t_leaf(static_cast<std::size_t>(n));

    auto wire_tree = [&](const Nodes& nodes, auto cross_of, auto cap_port,
                         std::vector<Slot>& leaf_slot) {
        for (std::size_t node = 0; node < nodes.left.size(); ++node) {
            if (nodes.left[node] < 0) continue;
            int c = cross_of(static_cast<int>(node));
            for (bool left_side : {true, false}) {
                int child = left_side ? nodes.left[node] : nodes.right[node];
                int port = cap_port(left_side);
                if (nodes.leaf_index[static_cast<std::size_t>(child)] >= 0) {
                    leaf_slot[static_cast<std::size_t>(
                        nodes.leaf_index[static_cast<std::size_t>(child)])] = Slot{c, port};
                } else {
                    join(c, port, cross_of(child), kStem);
                }
            }
        }
    };
    wire_tree(sn, s_cross, s_cap_port, s_leaf);
    wire_tree(tn, t_cross, t_cap_port, t_leaf);

    // Leaf gluing (flavor F: leaf i to leaf i).
    for (int i = 0; i < n; ++i)
        join(s_leaf[static_cast<std::size_t>(i)].crossing, s_leaf[static_cast<std::size_t>(i)].port,
             t_leaf[static_cast<std::size_t>(i)].crossing, t_leaf[static_cast<std::size_t>(i)].port);

    // Through lines glue equal gaps.
    std::vector<int> t_gap_cross(static_cast<std::size_t>(n), -1);
    for (std::size_t node = 0; node < tn.left.size(); ++node)
        if (tn.left[node] >= 0)
            t_gap_cross[static_cast<std::size_t>(tn.gap[node])] = t_cross(static_cast<int>(node));
    for (std::size_t node = 0; node < sn.left.size(); ++node) {
        if (sn.left[node] < 0) continue;
        int g = sn.gap[node];
        join(s_cross(static_cast<int>(node)), kThrough, t_gap_cross[static_cast<std::size_t>(g)],
             kThrough);
    }

    // Closure arc joins the two root stems around the right side.
    out.closure_arc = join(s_cross(sn.root), kStem, t_cross(tn.root), kStem);

    out.diagram = LinkDiagram(std::move(crossings), 0);
    out.s_vertex_crossing.resize(static_cast<std::size_t>(cs));
    out.t_vertex_crossing.resize(static_cast<std::size_t>(cs));
    out.s_vertex_gap.resize(static_cast<std::size_t>(cs));
    out.t_vertex_gap.resize(static_cast<std::size_t>(cs));
    for (std::size_t node = 0; node < sn.left.size(); ++node)
        if (sn.left[node] >= 0) {
            int r = sn.internal_rank[node];
            out.s_vertex_crossing[static_cast<std::size_t>(r)] = r;
            out.s_vertex_gap[static_cast<std::size_t>(r)] = sn.gap[node];
        }
    for (std::size_t node = 0; node < tn.left.size(); ++node)
        if (tn.left[node] >= 0) {
            int r = tn.internal_rank[node];
            out.t_vertex_crossing[static_cast<std::size_t>(r)] = cs + r;
            out.t_vertex_gap[static_cast<std::size_t>(r)] = tn.gap[node];
        }
    return out;
}

LinkDiagram build_link(const GroupElement& g) {
    if (g.flavor() != Flavor::F)
        throw domain_error("link construction is defined for flavor F");
    return build_link_pair(g.top(), g.bottom()).diagram;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
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

Components components(const LinkDiagram& d) {
    // Strand continuation: entering port p leaves at p+2; arcs identify
    // their two slots.
    const int c = d.crossing_count();
    UnionFind uf(4 * c);
    auto slot_id = [](int crossing, int port) { return 4 * crossing + port; };
    for (int i = 0; i < c; ++i) {
        uf.unite(slot_id(i, 0), slot_id(i, 2));
        uf.unite(slot_id(i, 1), slot_id(i, 3));
    }
    for (const auto& slots : d.arc_slots())
        uf.unite(slot_id(slots[0].crossing, slots[0].port), slot_id(slots[1].crossing, slots[1].port));

    std::map<int, int> root_to_comp;
    Components out;
    out.arc_component.assign(static_cast<std::size_t>(d.arc_count()), -1);
    auto slots = d.arc_slots();
    for (int a = 0; a < d.arc_count(); ++a) {
        int root = uf.find(slot_id(slots[static_cast<std::size_t>(a)][0].crossing,
                                   slots[static_cast<std::size_t>(a)][0].port));
        auto it = root_to_comp.find(root);
        if (it == root_to_comp.end())
            it = root_to_comp.emplace(root, static_cast<int>(root_to_comp.size())).first;
        out.arc_component[static_cast<std::size_t>(a)] = it->second;
    }
    out.count = static_cast<int>(root_to_comp.size()) + d.free_loops();
    return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
    std::vector<Crossing> out;
    out.reserve(static_cast<std::size_t>(d.crossing_count()));
    for (const Crossing& c : d.crossings()) {
        Crossing m;
        for (int p = 0; p < 4; ++p)
            m.arc[static_cast<std::size_t>(p)] = c.arc[static_cast<std::size_t>((p + 1) % 4)];
        out.push_back(m);
    }
    return LinkDiagram(std::move(out), d.free_loops());
}

int writhe(const LinkDiagram& d) {
    if (components(d).count != 1 || d.free_loops() != 0)
        throw domain_error("writhe is exposed for single-component diagrams only");
    if (d.crossing_count() == 0) return 0;
    // Walk the single strand recording the exit port of each crossing pass;
    // the sign pairs the under exit with the over exit.
    auto slots = d.arc_slots();
    std::vector<int> under_exit(static_cast<std::size_t>(d.crossing_count()), -1);
    std::vector<int> over_exit(static_cast<std::size_t>(d.crossing_count()), -1);
    // Start anywhere: arc 0 from its slot 0 toward slot 1.
    int arc = 0;
    int into = 1;  // entering slots[arc][into]
    const int total_passes = 2 * d.crossing_count();
    for (int step = 0; step < total_passes; ++step) {
        Slot s = slots[static_cast<std::size_t>(arc)][static_cast<std::size_t>(into)];
        int exit_port = (s.port + 2) % 4;
        (s.port % 2 == 0 ? under_exit : over_exit)[static_cast<std::size_t>(s.crossing)] = exit_port;
        int next_arc = d.crossings()[static_cast<std::size_t>(s.crossing)]
                           .arc[static_cast<std::size_t>(exit_port)];
        const auto& ns = slots[static_cast<std::size_t>(next_arc)];
        into = (ns[0].crossing == s.crossing && ns[0].port == exit_port) ? 1 : 0;
        arc = next_arc;
    }
    int w = 0;
    for (int i = 0; i < d.crossing_count(); ++i) {
        int diff = (under_exit[static_cast<std::size_t>(i)] -
                    over_exit[static_cast<std::size_t>(i)] + 4) % 4;
        w += diff == 1 ? 1 : -1;
    }
    return w;
}

}  // namespace thompson

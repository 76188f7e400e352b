#include "thompson/bracket.hpp"

#include <algorithm>
#include <numeric>

namespace thompson {

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        long long& v = coeffs_[e];
        v += c;
        if (v == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [e1, c1] : a.coeffs_)
        for (const auto& [e2, c2] : b.coeffs_) {
            long long& v = p.coeffs_[e1 + e2];
            v += c1 * c2;
            if (v == 0) p.coeffs_.erase(e1 + e2);
        }
    return p;
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
    return p;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [e, c] = *it;
        if (!out.empty())
            out += c > 0 ? " + " : " - ";
        else if (c < 0)
            out += "-";
        long long mag = c > 0 ? c : -c;
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e != 0) {
            out += "A";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

const LaurentPoly& delta_pow(int k) {
    static std::vector<LaurentPoly> cache{LaurentPoly(1)};
    static const LaurentPoly delta =
        LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * delta);
    return cache[static_cast<std::size_t>(k)];
}

LaurentPoly twist_factor(int k) {
    int mag = k >= 0 ? k : -k;
    return LaurentPoly::monomial(mag % 2 ? -1 : 1, 3 * k);
}

namespace {

struct FlatUF {
    std::vector<int> parent;
    void reset(int n) {
        parent.resize(static_cast<std::size_t>(n));
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

LaurentPoly kauffman_bracket(const LinkDiagram& d, int max_crossings) {
    const int c = d.crossing_count();
    if (c > max_crossings)
        throw domain_error("state sum refused: " + std::to_string(c) + " crossings exceeds bound " +
                           std::to_string(max_crossings));
    if (c == 0) {
        if (d.free_loops() == 0) throw domain_error("empty diagram has no bracket normalization");
        return delta_pow(d.free_loops() - 1);
    }

    // Precollect arc endpoints as slot ids.
    auto slot_id = [](int crossing, int port) { return 4 * crossing + port; };
    std::vector<std::pair<int, int>> arc_pairs;
    arc_pairs.reserve(static_cast<std::size_t>(d.arc_count()));
    for (const auto& slots : d.arc_slots())
        arc_pairs.emplace_back(slot_id(slots[0].crossing, slots[0].port),
                               slot_id(slots[1].crossing, slots[1].port));

    // count[(#A - #B, loops)] over all states, in lexicographic state order.
    std::map<std::pair<int, int>, long long> histogram;
    FlatUF uf;
    const std::uint64_t states = 1ull << c;
    for (std::uint64_t state = 0; state < states; ++state) {
        uf.reset(4 * c);
        for (const auto& [x, y] : arc_pairs) uf.unite(x, y);
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            if (state >> i & 1) {
                // B-smoothing joins (p0,p3) and (p1,p2).
                uf.unite(slot_id(i, 0), slot_id(i, 3));
                uf.unite(slot_id(i, 1), slot_id(i, 2));
            } else {
                ++a_count;
                uf.unite(slot_id(i, 0), slot_id(i, 1));
                uf.unite(slot_id(i, 2), slot_id(i, 3));
            }
        }
        int loops = 0;
        for (int s = 0; s < 4 * c; ++s)
            if (uf.find(s) == s) ++loops;
        ++histogram[{2 * a_count - c, loops}];
    }

    LaurentPoly total;
    for (const auto& [key, count] : histogram) {
        auto [exp, loops] = key;
        total += LaurentPoly::monomial(count, exp) * delta_pow(loops + d.free_loops() - 1);
    }
    return total;
}

namespace {

// Mutable diagram for the Reidemeister passes.
struct MutDiagram {
    std::vector<Crossing> cross;
    std::vector<bool> alive;
    int free_loops;
    int twist = 0;

    explicit MutDiagram(const LinkDiagram& d)
        : cross(d.crossings()), alive(d.crossings().size(), true), free_loops(d.free_loops()) {}

    // Slots of an arc among the live crossings.
    std::vector<Slot> slots_of(int arc) const {
        std::vector<Slot> out;
        for (int c = 0; c < static_cast<int>(cross.size()); ++c) {
            if (!alive[static_cast<std::size_t>(c)]) continue;
            for (int p = 0; p < 4; ++p)
                if (cross[static_cast<std::size_t>(c)].arc[static_cast<std::size_t>(p)] == arc)
                    out.push_back({c, p});
        }
        return out;
    }

    void replace_arc(int from, int to) {
        if (from == to) return;
        for (int c = 0; c < static_cast<int>(cross.size()); ++c) {
            if (!alive[static_cast<std::size_t>(c)]) continue;
            for (int p = 0; p < 4; ++p)
                if (cross[static_cast<std::size_t>(c)].arc[static_cast<std::size_t>(p)] == from)
                    cross[static_cast<std::size_t>(c)].arc[static_cast<std::size_t>(p)] = to;
        }
    }

    // Fuse the strands that used to continue through a removed crossing:
    // the arcs at two slots become one (or a free loop if they coincide).
    void fuse(int arc_a, int arc_b) {
        if (arc_a == arc_b) {
            ++free_loops;
            return;
        }
        replace_arc(arc_b, arc_a);
    }

    bool try_r1() {
        for (int c = 0; c < static_cast<int>(cross.size()); ++c) {
            if (!alive[static_cast<std::size_t>(c)]) continue;
            const auto& arc = cross[static_cast<std::size_t>(c)].arc;
            for (int i = 0; i < 4; ++i) {
                if (arc[static_cast<std::size_t>(i)] != arc[static_cast<std::size_t>((i + 1) % 4)])
                    continue;
                // Kink on ports {i, i+1}: A-pair for even i.
                twist += i % 2 == 0 ? 1 : -1;
                int x = arc[static_cast<std::size_t>((i + 2) % 4)];
                int y = arc[static_cast<std::size_t>((i + 3) % 4)];
                alive[static_cast<std::size_t>(c)] = false;
                fuse(x, y);
                return true;
            }
        }
        return false;
    }

    bool try_r2() {
        // Arcs between the same two crossings, adjacent ports at both ends,
        // over/under types matching along each arc, and opposite joining
        // smoothings (same-parity pairs are twisted bands, not R2).
        for (int u = 0; u < static_cast<int>(cross.size()); ++u) {
            if (!alive[static_cast<std::size_t>(u)]) continue;
            for (int pa = 0; pa < 4; ++pa) {
                int a = cross[static_cast<std::size_t>(u)].arc[static_cast<std::size_t>(pa)];
                int pb = (pa + 1) % 4;
                int b = cross[static_cast<std::size_t>(u)].arc[static_cast<std::size_t>(pb)];
                if (a == b) continue;  // kink, not R2
                auto sa = slots_of(a);
                auto sb = slots_of(b);
                if (sa.size() != 2 || sb.size() != 2) continue;
                Slot fa = sa[0].crossing == u && sa[0].port == pa ? sa[1] : sa[0];
                Slot fb = sb[0].crossing == u && sb[0].port == pb ? sb[1] : sb[0];
                if (fa.crossing != fb.crossing || fa.crossing == u) continue;
                int v = fa.crossing;
                // adjacency at v
                bool fb_next = (fb.port + 4 - fa.port) % 4 == 1;
                bool fa_next = (fa.port + 4 - fb.port) % 4 == 1;
                if (!fb_next && !fa_next) continue;
                // over/under types match along each arc
                if (pa % 2 != fa.port % 2 || pb % 2 != fb.port % 2) continue;
                // Adjacent pairs {p, p+1} are joined by the A-smoothing iff
                // p is even; the two ends must join with opposite types.
                bool join_a_at_u = pa % 2 == 0;
                bool join_a_at_v = (fb_next ? fa.port : fb.port) % 2 == 0;
                if (join_a_at_u == join_a_at_v) continue;

                int outer_ua = cross[static_cast<std::size_t>(u)].arc[static_cast<std::size_t>((pa + 2) % 4)];
                int outer_ub = cross[static_cast<std::size_t>(u)].arc[static_cast<std::size_t>((pb + 2) % 4)];
                int outer_va = cross[static_cast<std::size_t>(v)].arc[static_cast<std::size_t>((fa.port + 2) % 4)];
                int outer_vb = cross[static_cast<std::size_t>(v)].arc[static_cast<std::size_t>((fb.port + 2) % 4)];
                alive[static_cast<std::size_t>(u)] = false;
                alive[static_cast<std::size_t>(v)] = false;
                // Strand continuity: outer(u, pa+2) -u- a -v- outer(v, fa+2)
                // fuses with outer_va, and likewise along b. The first
                // fusion may rename the second pair's arcs.
                fuse(outer_ua, outer_va);
                if (outer_ua != outer_va) {
                    if (outer_ub == outer_va) outer_ub = outer_ua;
                    if (outer_vb == outer_va) outer_vb = outer_ua;
                }
                fuse(outer_ub, outer_vb);
                return true;
            }
        }
        return false;
    }

    LinkDiagram finish() const {
        std::vector<Crossing> out;
        for (int c = 0; c < static_cast<int>(cross.size()); ++c)
            if (alive[static_cast<std::size_t>(c)]) out.push_back(cross[static_cast<std::size_t>(c)]);
        return LinkDiagram(std::move(out), free_loops);
    }
};

}  // namespace

SimplifyResult simplify(const LinkDiagram& d) {
    MutDiagram m(d);
    for (;;) {
        if (m.try_r1()) continue;
        if (m.try_r2()) continue;
        break;
    }
    return {m.finish(), m.twist};
}

LaurentPoly normalized_bracket(const LinkDiagram& d, int max_crossings) {
    return twist_factor(-writhe(d)) * kauffman_bracket(d, max_crossings);
}

}  // namespace thompson

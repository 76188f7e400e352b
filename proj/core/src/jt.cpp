#include "thompson/jt.hpp"

#include "thompson/parse.hpp"

namespace thompson {

Fingerprint fingerprint(const LinkDiagram& d, int max_crossings) {
    SimplifyResult s = simplify(d);
    return {components(s.diagram).count, kauffman_bracket(s.diagram, max_crossings)};
}

Fingerprint fingerprint(const GroupElement& g, int max_crossings) {
    return fingerprint(build_link(g), max_crossings);
}

LaurentPoly kink_normal_form(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    int lowest = p.coeffs().begin()->first;
    // Shift by (-A³)^{-k} so the lowest exponent lands in {0, 1, 2}.
    int k = lowest >= 0 ? lowest / 3 : -((-lowest + 2) / 3);
    return twist_factor(-k) * p;
}

bool fingerprints_match(const Fingerprint& a, const Fingerprint& b) {
    return a.components == b.components &&
           kink_normal_form(a.bracket) == kink_normal_form(b.bracket);
}

LinkDiagram unknot_diagram() { return LinkDiagram({}, 1); }

LinkDiagram hopf_link_diagram() {
    // Trace closure of the two-crossing braid; each circle passes over
    // once and under once.
    std::vector<Crossing> c(2);
    c[0].arc = {3, 1, 0, 2};
    c[1].arc = {1, 3, 2, 0};
    return LinkDiagram(std::move(c), 0);
}

LinkDiagram trefoil_diagram() {
    // Trace closure of the three-crossing 2-braid: the alternating
    // minimal trefoil diagram.
    std::vector<Crossing> c(3);
    c[0].arc = {5, 1, 0, 4};
    c[1].arc = {1, 3, 2, 0};
    c[2].arc = {3, 5, 4, 2};
    return LinkDiagram(std::move(c), 0);
}

JtResult jt_index_search(const Fingerprint& target, int max_leaves, int max_crossings) {
    JtResult out;
    for (int n = 1; n <= max_leaves && !out.found; ++n) {
        std::vector<std::string> hits;
        for (const Tree& t : trees_with_leaves(n)) {
            for (const Tree& s : trees_with_leaves(n)) {
                if (n > 1 && !is_reduced_pair(t, identity_perm(n), s)) continue;
                GroupElement g(t, identity_perm(n), s, Flavor::F);
                Fingerprint fp = fingerprint(g, max_crossings);
                out.audit.push_back({print_element(g), fp});
                if (fingerprints_match(fp, target)) hits.push_back(print_element(g));
            }
        }
        if (!hits.empty()) {
            out.found = true;
            out.leaves = n;
            out.witnesses = std::move(hits);
        }
    }
    return out;
}

}  // namespace thompson

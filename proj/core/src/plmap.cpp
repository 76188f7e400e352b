#include "thompson/plmap.hpp"

#include <algorithm>

namespace thompson {

namespace {

// Merge adjacent pieces carrying the same affine map.
std::vector<PLPiece> merged(std::vector<PLPiece> pieces) {
    std::vector<PLPiece> out;
    for (auto& p : pieces) {
        if (!out.empty() && out.back().slope_log2 == p.slope_log2 &&
            out.back().offset == p.offset && out.back().hi == p.lo) {
            out.back().hi = p.hi;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

Dyadic mod1(const Dyadic& x) {
    Dyadic r = x;
    while (r < Dyadic(0)) r = r + Dyadic(1);
    while (!(r < Dyadic(1))) r = r - Dyadic(1);
    return r;
}

}  // namespace

PLMap::PLMap(std::vector<PLPiece> pieces, bool circle)
    : pieces_(merged(std::move(pieces))), circle_(circle) {
    if (pieces_.empty()) throw domain_error("PL map needs at least one piece");
    if (!(pieces_.front().lo == Dyadic(0)) || !(pieces_.back().hi == Dyadic(1)))
        throw domain_error("PL map must cover [0,1]");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        if (!(pieces_[i].hi == pieces_[i + 1].lo))
            throw domain_error("PL map pieces must tile [0,1]");
        if (!circle_ && !(pieces_[i].eval(pieces_[i].hi) == pieces_[i + 1].eval(pieces_[i + 1].lo)))
            throw domain_error("PL map is discontinuous");
    }
}

Dyadic PLMap::eval(const Dyadic& x) const {
    if (x < Dyadic(0) || Dyadic(1) < x) throw domain_error("PL map evaluated outside [0,1]");
    for (const auto& p : pieces_) {
        if ((p.lo < x || p.lo == x) && (x < p.hi || x == p.hi)) {
            Dyadic v = p.eval(x);
            return circle_ ? mod1(v) : v;
        }
    }
    throw domain_error("PL map pieces do not cover the point");
}

std::vector<Dyadic> PLMap::breakpoints() const {
    std::vector<Dyadic> out;
    out.push_back(pieces_.front().lo);
    for (const auto& p : pieces_) out.push_back(p.hi);
    return out;
}

bool PLMap::is_identity() const {
    for (const auto& p : pieces_)
        if (p.slope_log2 != 0 || !p.offset.is_zero()) return false;
    return true;
}

PLMap PLMap::inverse() const {
    if (circle_) throw domain_error("inverse of circle PL maps is not supported");
    std::vector<PLPiece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        PLPiece q;
        q.lo = p.eval(p.lo);
        q.hi = p.eval(p.hi);
        q.slope_log2 = -p.slope_log2;
        q.offset = (-p.offset).shifted(-p.slope_log2);
        out.push_back(q);
    }
    std::sort(out.begin(), out.end(),
              [](const PLPiece& a, const PLPiece& b) { return a.lo < b.lo; });
    return PLMap(std::move(out), false);
}

PLMap as_pl_map(const GroupElement& g) {
    if (g.flavor() == Flavor::V)
        throw domain_error("flavor V elements are not PL interval maps");
    auto s_cuts = g.bottom().leaf_cuts();
    auto t_cuts = g.top().leaf_cuts();
    auto s_depths = g.bottom().depths();
    auto t_depths = g.top().depths();
    std::vector<PLPiece> pieces;
    pieces.reserve(static_cast<std::size_t>(g.leaves()));
    for (int i = 0; i < g.leaves(); ++i) {
        int m = g.perm()[static_cast<std::size_t>(i)];
        PLPiece p;
        p.lo = s_cuts[static_cast<std::size_t>(i)];
        p.hi = s_cuts[static_cast<std::size_t>(i) + 1];
        p.slope_log2 = s_depths[static_cast<std::size_t>(i)] - t_depths[static_cast<std::size_t>(m)];
        p.offset = t_cuts[static_cast<std::size_t>(m)] - p.lo.shifted(p.slope_log2);
        pieces.push_back(p);
    }
    return PLMap(std::move(pieces), g.flavor() == Flavor::T);
}

PLMap compose(const PLMap& g, const PLMap& h) {
    if (g.circle() || h.circle())
        throw domain_error("PL composition is supported for interval maps only");
    // Breakpoints of g∘h: those of h plus h-preimages of those of g.
    std::vector<Dyadic> cuts = h.breakpoints();
    PLMap hinv = h.inverse();
    for (const Dyadic& b : g.breakpoints()) cuts.push_back(hinv.eval(b));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<PLPiece> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Dyadic& lo = cuts[i];
        const Dyadic& hi = cuts[i + 1];
        // The cut set refines both piece structures, so [lo, hi] sits inside
        // a single piece of h and its h-image inside a single piece of g.
        const PLPiece* ph = nullptr;
        for (const auto& p : h.pieces())
            if ((p.lo < lo || p.lo == lo) && (hi < p.hi || hi == p.hi)) { ph = &p; break; }
        if (!ph) throw domain_error("PL composition failed to localize a piece");
        Dyadic mid_image_lo = ph->eval(lo);
        Dyadic mid_image_hi = ph->eval(hi);
        const PLPiece* pg = nullptr;
        for (const auto& p : g.pieces())
            if ((p.lo < mid_image_lo || p.lo == mid_image_lo) &&
                (mid_image_hi < p.hi || mid_image_hi == p.hi)) { pg = &p; break; }
        if (!pg) throw domain_error("PL composition failed to localize a piece");
        PLPiece q;
        q.lo = lo;
        q.hi = hi;
        q.slope_log2 = pg->slope_log2 + ph->slope_log2;
        q.offset = ph->offset.shifted(pg->slope_log2) + pg->offset;
        pieces.push_back(q);
    }
    return PLMap(std::move(pieces), false);
}

std::vector<std::pair<Dyadic, Dyadic>> fixed_intervals(const GroupElement& g) {
    if (g.flavor() != Flavor::F)
        throw domain_error("fixed-point measure is defined for flavor F");
    PLMap m = as_pl_map(g);
    std::vector<std::pair<Dyadic, Dyadic>> out;
    for (const auto& p : m.pieces()) {
        if (p.slope_log2 == 0 && p.offset.is_zero()) {
            if (!out.empty() && out.back().second == p.lo)
                out.back().second = p.hi;
            else
                out.emplace_back(p.lo, p.hi);
        }
    }
    return out;
}

Dyadic fixed_point_measure(const GroupElement& g) {
    Dyadic total(0);
    for (const auto& [lo, hi] : fixed_intervals(g)) total = total + (hi - lo);
    return total;
}

}  // namespace thompson

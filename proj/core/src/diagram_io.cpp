#include "thompson/diagram_io.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace thompson {

std::string export_code(const LinkDiagram& d) {
    std::string out;
    for (const Crossing& c : d.crossings()) {
        out += "X(" + std::to_string(c.arc[0]) + "," + std::to_string(c.arc[1]) + "," +
               std::to_string(c.arc[2]) + "," + std::to_string(c.arc[3]) + ")\n";
    }
    for (int i = 0; i < d.free_loops(); ++i) out += "O\n";
    return out;
}

LinkDiagram parse_code(const std::string& text) {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) continue;
        if (s == "O") {
            ++free_loops;
            continue;
        }
        if (s.size() < 4 || s.compare(0, 2, "X(") != 0 || s.back() != ')')
            throw parse_error("expected X(a,b,c,d) or O", lineno);
        Crossing c;
        std::size_t pos = 2;
        for (int p = 0; p < 4; ++p) {
            std::size_t end = s.find(p == 3 ? ')' : ',', pos);
            if (end == std::string::npos) throw parse_error("malformed X line", lineno);
            try {
                c.arc[static_cast<std::size_t>(p)] = std::stoi(s.substr(pos, end - pos));
            } catch (const std::exception&) {
                throw parse_error("bad arc identifier", lineno);
            }
            pos = end + 1;
        }
        crossings.push_back(c);
    }
    try {
        return LinkDiagram(std::move(crossings), free_loops);
    } catch (const domain_error& e) {
        throw parse_error(e.what(), lineno);
    }
}

namespace {

struct SvgTreeLayout {
    // Node positions for one tree; heights grow away from the leaf line.
    std::vector<double> x, y;
    std::vector<int> left, right, gap;
    int root;
};

SvgTreeLayout layout(const Tree& tree, double unit, double pad, double y0, double dir) {
    const std::string& s = tree.shape();
    int n = static_cast<int>(s.size());
    SvgTreeLayout L;
    L.x.assign(n, 0);
    L.y.assign(n, 0);
    L.left.assign(n, -1);
    L.right.assign(n, -1);
    L.gap.assign(n, -1);
    int pos = 0, next_leaf = 0;
    auto rec = [&](auto&& self) -> std::pair<int, int> {  // (node, height)
        int id = pos++;
        if (s[static_cast<std::size_t>(id)] == '0') {
            L.x[static_cast<std::size_t>(id)] = pad + next_leaf * unit;
            L.y[static_cast<std::size_t>(id)] = y0;
            ++next_leaf;
            return {id, 0};
        }
        auto [l, hl] = self(self);
        int g = next_leaf;
        auto [r, hr] = self(self);
        int h = std::max(hl, hr) + 1;
        L.left[static_cast<std::size_t>(id)] = l;
        L.right[static_cast<std::size_t>(id)] = r;
        L.gap[static_cast<std::size_t>(id)] = g;
        L.x[static_cast<std::size_t>(id)] = pad + (g - 0.5) * unit;
        L.y[static_cast<std::size_t>(id)] = y0 + dir * h * unit;
        return {id, h};
    };
    L.root = rec(rec).first;
    return L;
}

void draw_tree(std::ostringstream& svg, const SvgTreeLayout& L, double y0, double dir,
               double unit) {
    const double dip = 0.3 * unit;   // cap crossing offset toward the leaf line
    const double gapw = 0.1 * unit;  // visual break half-width
    for (std::size_t v = 0; v < L.x.size(); ++v) {
        if (L.left[v] < 0) continue;
        double cx = L.x[v];
        double cy = L.y[v];
        double dy = cy - dir * dip;  // crossing point of cap and vertical
        auto lx = L.x[static_cast<std::size_t>(L.left[v])];
        auto ly = L.y[static_cast<std::size_t>(L.left[v])];
        auto rx = L.x[static_cast<std::size_t>(L.right[v])];
        auto ry = L.y[static_cast<std::size_t>(L.right[v])];
        // Cap: child-to-child curve through the crossing point (over).
        svg << "<path d=\"M " << lx << " " << ly << " Q " << lx << " " << dy << " " << cx << " "
            << dy << " Q " << rx << " " << dy << " " << rx << " " << ry
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        // Vertical under-strand, broken at the cap.
        svg << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << cx << "\" y2=\""
            << dy + dir * gapw << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << cx << "\" y1=\"" << dy - dir * gapw << "\" x2=\"" << cx
            << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
    }
}

}  // namespace

std::string export_svg_pair(const Tree& t, const Tree& s) {
    const double unit = 40.0, pad = 40.0;
    const int n = s.leaf_count();
    if (t.leaf_count() != n) throw domain_error("tree pair has mismatched leaf counts");
    // Heights bound the canvas.
    auto height = [](const Tree& tr) {
        int h = 0;
        for (int d : tr.depths()) h = std::max(h, d);
        return h;
    };
    double y0 = pad + height(t) * unit + unit;
    double total_h = y0 + height(s) * unit + unit + pad;
    double total_w = pad + n * unit + 2 * pad;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total_w
        << "\" height=\"" << total_h << "\">\n";
    if (n == 1) {
        svg << "<circle cx=\"" << pad + unit << "\" cy=\"" << y0 << "\" r=\"" << unit
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        svg << "</svg>\n";
        return svg.str();
    }
    // Bottom tree s below the leaf line, top tree t mirrored above.
    SvgTreeLayout sl = layout(s, unit, pad, y0, +1.0);
    SvgTreeLayout tl = layout(t, unit, pad, y0, -1.0);
    draw_tree(svg, sl, y0, +1.0, unit);
    draw_tree(svg, tl, y0, -1.0, unit);
    // Closure arc on the right from the bottom root stem to the top one.
    double sx = sl.x[static_cast<std::size_t>(sl.root)];
    double sy = sl.y[static_cast<std::size_t>(sl.root)] + 0.5 * unit;
    double tx = tl.x[static_cast<std::size_t>(tl.root)];
    double ty = tl.y[static_cast<std::size_t>(tl.root)] - 0.5 * unit;
    double xr = pad + n * unit + 0.5 * pad;
    svg << "<line x1=\"" << sx << "\" y1=\"" << sl.y[static_cast<std::size_t>(sl.root)]
        << "\" x2=\"" << sx << "\" y2=\"" << sy << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << tx << "\" y1=\"" << tl.y[static_cast<std::size_t>(tl.root)]
        << "\" x2=\"" << tx << "\" y2=\"" << ty << "\" stroke=\"black\"/>\n";
    svg << "<path d=\"M " << sx << " " << sy << " C " << xr << " " << sy << " " << xr << " " << ty
        << " " << tx << " " << ty << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string export_svg(const GroupElement& g) {
    if (g.flavor() != Flavor::F)
        throw domain_error("SVG export is defined for flavor F");
    return export_svg_pair(g.top(), g.bottom());
}

std::string fingerprint_json(const Fingerprint& fp) {
    nlohmann::json bracket = nlohmann::json::object();
    for (const auto& [e, c] : fp.bracket.coeffs()) bracket[std::to_string(e)] = c;
    nlohmann::json out;
    out["components"] = fp.components;
    out["bracket"] = bracket;
    return out.dump();
}

Fingerprint parse_fingerprint_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad fingerprint JSON: ") + e.what(), 0);
    }
    Fingerprint fp;
    if (!j.contains("components") || !j.contains("bracket"))
        throw parse_error("fingerprint JSON needs 'components' and 'bracket'", 0);
    fp.components = j["components"].get<int>();
    LaurentPoly p;
    for (const auto& [k, v] : j["bracket"].items())
        p += LaurentPoly::monomial(v.get<long long>(), std::stoi(k));
    fp.bracket = p;
    return fp;
}

}  // namespace thompson
